"""
Global maximization of pair fidelities |[U(t)]_{j,i}| over a time window.

The window is sampled on a uniform grid, the best local maxima are
bracketed by their grid neighbours and refined by golden-section search,
then polished by bisection on the derivative of |entry|^2 where it
changes sign, which pins t* far below the resolution of the flat peak.
"""
import logging
import math
from dataclasses import asdict, dataclass
from typing import Tuple

import numpy as np

from dynamics.golden_section import golden_section_max
from dynamics.propagator import pair_weights
from spectral.eigen import eigendecompose
from utils.config import DEFAULT_REFINE_TOL, TIE_TOL, TOP_CANDIDATES, default_grid

logger = logging.getLogger(__name__)

PAIR_CHUNK = 64


@dataclass(frozen=True)
class FidelityMax:
    pair: Tuple[int, int]
    t_star: float
    f_star: float
    grid_size: int
    refine_tol: float
    t_max: float

    def to_dict(self):
        data = asdict(self)
        data['i'], data['j'] = self.pair
        del data['pair']
        return data


def better(candidate_f, candidate_t, best_f, best_t):
    if candidate_f > best_f + TIE_TOL:
        return True
    return abs(candidate_f - best_f) <= TIE_TOL and candidate_t < best_t


class EntryFunction:
    """t -> [U(t)]_{j,i} built from the eigendecomposition weights."""

    def __init__(self, eigenvalues, weights):
        self.lams = np.asarray(eigenvalues, dtype=float)
        self.weights = np.asarray(weights, dtype=float)

    def value(self, t):
        return np.exp(-1j * self.lams * t) @ self.weights

    def modulus(self, t):
        return float(abs(self.value(t)))

    def slope(self, t):
        # d/dt |f|^2 = 2 Re(conj(f) f')
        phases = np.exp(-1j * self.lams * t) * self.weights
        f = phases.sum()
        df = (-1j * self.lams * phases).sum()
        return 2.0 * float((np.conj(f) * df).real)


def _local_maxima(values, top, margin=0.0):
    """
    Indices of the top sampled local maxima, plus every local maximum
    within margin of the best sample, in increasing index order.
    """
    values = np.asarray(values, dtype=float)
    padded = np.concatenate(([-np.inf], values, [-np.inf]))
    mask = (values >= padded[:-2]) & (values >= padded[2:])
    idx = np.flatnonzero(mask)
    order = np.lexsort((idx, -values[idx]))
    chosen = set(idx[order[:top]].tolist())
    chosen.update(idx[values[idx] >= values[idx].max() - margin].tolist())
    return sorted(int(k) for k in chosen)


def _polish(entry, x, lo, hi, tol):
    # bisection on the slope; only where it brackets a sign change around x
    width = max(1e-6, 10 * tol)
    a, b = max(lo, x - width), min(hi, x + width)
    sa, sb = entry.slope(a), entry.slope(b)
    if not (sa > 0 > sb):
        return x
    while b - a > tol:
        m = 0.5 * (a + b)
        sm = entry.slope(m)
        if sm > 0:
            a = m
        elif sm < 0:
            b = m
        else:
            return m
    return 0.5 * (a + b)


def refine_candidates(entry, times, values, refine_tol=DEFAULT_REFINE_TOL, top=TOP_CANDIDATES):
    best_t, best_f = float(times[0]), -math.inf
    last = len(times) - 1
    # a sampled peak sits at most (lam_max * step)^2 / 2 below the true one
    step = float(times[1] - times[0])
    margin = 0.5 * (float(np.max(np.abs(entry.lams))) * step) ** 2
    for k in _local_maxima(values, top, margin):
        lo = float(times[max(k - 1, 0)])
        hi = float(times[min(k + 1, last)])
        t, f = golden_section_max(entry.modulus, lo, hi, refine_tol)
        t = _polish(entry, t, lo, hi, refine_tol)
        f = entry.modulus(t)
        # on a flat peak at a window edge the search drifts inward; keep the edge on ties
        at_edge = k == 0 or k == last
        if values[k] > f + TIE_TOL or (at_edge and values[k] >= f - TIE_TOL):
            t, f = float(times[k]), float(values[k])
        if better(f, t, best_f, best_t):
            best_t, best_f = t, f
    return best_t, best_f


def max_fidelity(graph, i, j, t_max, grid=None, refine_tol=DEFAULT_REFINE_TOL):
    return max_fidelity_pairs(graph, [(i, j)], t_max, grid, refine_tol)[0]


def max_fidelity_pairs(graph, pairs, t_max, grid=None, refine_tol=DEFAULT_REFINE_TOL):
    if grid is None:
        grid = default_grid()
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max!r}")
    if grid < 2:
        raise ValueError(f"grid must have at least 2 samples, got {grid!r}")
    pairs = [(graph.check_vertex(i), graph.check_vertex(j)) for i, j in pairs]

    decomposition = eigendecompose(graph)
    times = np.linspace(0.0, float(t_max), int(grid))
    phases = np.exp(-1j * np.multiply.outer(times, decomposition.eigenvalues))

    results = []
    for start in range(0, len(pairs), PAIR_CHUNK):
        chunk = pairs[start:start + PAIR_CHUNK]
        weights = np.column_stack([pair_weights(decomposition, i, j) for i, j in chunk])
        samples = np.abs(phases @ weights)
        for column, (i, j) in enumerate(chunk):
            entry = EntryFunction(decomposition.eigenvalues, weights[:, column])
            t_star, f_star = refine_candidates(entry, times, samples[:, column], refine_tol)
            results.append(FidelityMax((i, j), t_star, f_star, int(grid), refine_tol, float(t_max)))
    logger.debug("%s: maximized %d pairs on [0, %.6f] with %d samples",
                 graph.label(), len(pairs), t_max, grid)
    return results


def best_of(results):
    """Merge by maximum; ties go to the smaller pair, then the smaller t*."""
    best = None
    for result in sorted(results, key=lambda r: (r.pair, r.t_star)):
        if best is None or result.f_star > best.f_star + TIE_TOL:
            best = result
    return best
