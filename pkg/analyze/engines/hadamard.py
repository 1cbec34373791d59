import logging
from typing import Optional

import numpy as np

from utils.config import HADAMARD_TOL

logger = logging.getLogger(__name__)


def _square(matrix):
    m = np.asarray(matrix, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def is_scaled_complex_hadamard(matrix, tol=HADAMARD_TOL) -> Optional[float]:
    """
    Common modulus c when matrix / c is a complex Hadamard matrix
    (unimodular entries, H H^* = n I), else None.
    """
    m = _square(matrix)
    n = m.shape[0]
    moduli = np.abs(m)
    c = float(moduli.mean())
    if c <= tol or np.max(np.abs(moduli - c)) > tol:
        return None
    h = m / c
    gram = h @ h.conj().T
    if np.max(np.abs(gram - n * np.eye(n))) > tol * n:
        return None
    return c


def hadamard_fidelity_flat(matrix, tol=HADAMARD_TOL):
    """All entry moduli agree, so every vertex pair sees the same fidelity."""
    moduli = np.abs(_square(matrix))
    return bool(np.ptp(moduli) <= tol)
