import math
import os

# Maximization
DEFAULT_GRID = 20000
DEFAULT_REFINE_TOL = 1e-12
TOP_CANDIDATES = 5
DEFAULT_PST_TOL = 1e-6
NON_INTEGRAL_WINDOW = 6 * math.pi
SEPARATION_BOUND = 0.95
TIE_TOL = 1e-9

# Eigensolver
JACOBI_TOL = 1e-13
JACOBI_MAX_SWEEPS = 100
CLUSTER_TOL = 1e-6

# Persistency, Hadamard and probability-transfer checks
PERSISTENCY_GRID = 20001
ZERO_TOL = 1e-9
HADAMARD_TOL = 1e-10

GRID_ENV_VAR = "PSTLAB_GRID"


def default_grid():
    """Grid size for fidelity scans, overridable through PSTLAB_GRID."""
    raw = os.environ.get(GRID_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_GRID
    try:
        grid = int(raw)
    except ValueError:
        raise ValueError(f"{GRID_ENV_VAR} must be an integer, got {raw!r}")
    if grid < 2:
        raise ValueError(f"{GRID_ENV_VAR} must be at least 2, got {grid}")
    return grid
