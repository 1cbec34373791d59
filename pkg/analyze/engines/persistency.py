"""
Epsilon-persistency: the longest stretch of [0, 2*pi] on which the
modulus of a propagator entry stays inside a band of width 2*epsilon.

The entry is sampled on a uniform grid and the longest window with
max - min < 2*epsilon is found by a two-pointer sweep that keeps the
running max and min in monotonic deques. Windows are reported on grid
points, so they are maximal at grid resolution only.
"""
import logging
import math
from collections import deque

import numpy as np

from analyze.models import PersistencyResult, PersistencySummary
from dynamics.propagator import entry_series
from spectral.certificate import require_integral
from utils.config import PERSISTENCY_GRID

logger = logging.getLogger(__name__)

WINDOW = 2 * math.pi


def longest_band(values, epsilon):
    """Inclusive index range (lo, hi) of the longest window with max - min < 2*epsilon."""
    values = np.asarray(values, dtype=float)
    if epsilon <= 0:
        return None
    width = 2 * epsilon
    highs, lows = deque(), deque()
    lo = 0
    best = (0, 0)
    for hi, value in enumerate(values):
        while highs and values[highs[-1]] <= value:
            highs.pop()
        highs.append(hi)
        while lows and values[lows[-1]] >= value:
            lows.pop()
        lows.append(hi)
        while values[highs[0]] - values[lows[0]] >= width:
            lo += 1
            if highs[0] < lo:
                highs.popleft()
            if lows[0] < lo:
                lows.popleft()
        if hi - lo > best[1] - best[0]:
            best = (lo, hi)
    return best


def persistency(graph, i, j, epsilon, grid=PERSISTENCY_GRID):
    if epsilon < 0:
        raise ValueError(f"epsilon must be non-negative, got {epsilon!r}")
    if grid < 2:
        raise ValueError(f"grid must have at least 2 samples, got {grid!r}")
    i, j = graph.check_vertex(i), graph.check_vertex(j)
    require_integral(graph)

    times = np.linspace(0.0, WINDOW, int(grid))
    values = np.abs(entry_series(graph, i, j, times))
    band = longest_band(values, epsilon)
    if band is None:
        # no open band of width zero contains even one sample
        return PersistencyResult((i, j), float(epsilon), float(values[0]), (0.0, 0.0), 0.0)

    lo, hi = band
    window = values[lo:hi + 1]
    level = 0.5 * float(window.max() + window.min())
    t0, t1 = float(times[lo]), float(times[hi])
    logger.debug("%s (%d,%d) eps=%g: window [%.6f, %.6f]", graph.label(), i, j, epsilon, t0, t1)
    return PersistencyResult((i, j), float(epsilon), level, (t0, t1), t1 - t0)


def persistency_summary(graph, epsilon, grid=PERSISTENCY_GRID):
    """Maximum and mean persistency over all pairs i < j."""
    results = [
        persistency(graph, i, j, epsilon, grid)
        for i in range(1, graph.n + 1)
        for j in range(i + 1, graph.n + 1)
    ]
    if not results:
        raise ValueError("persistency summary needs at least two vertices")
    lengths = [r.length for r in results]
    best = results[int(np.argmax(lengths))]
    return PersistencySummary(float(epsilon), max(lengths), float(np.mean(lengths)), best)
