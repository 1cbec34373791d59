"""
Discrete-time transfer by powers of a unitary supported on a graph.

Powers of W_K4 are kept exactly: W = B / sqrt(3) with B an integer
matrix, so W^t = B^t / sqrt(3)^t and zero tests on B^t are exact.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from analyze.models import ProbabilityTransferResult, ZeroPattern
from utils.config import ZERO_TOL

logger = logging.getLogger(__name__)

TRANSFER_TOL = Fraction(1, 10 ** 9)
UNITARY_TOL = 1e-10

W_K4_SIGNS = (
    (0, -1, 1, 1),
    (1, 0, -1, 1),
    (1, -1, 0, -1),
    (1, 1, 1, 0),
)


@dataclass(frozen=True)
class ScaledIntegerMatrix:
    """entries / sqrt(base) ** power, entries a square integer matrix."""
    entries: Tuple[Tuple[int, ...], ...]
    base: int
    power: int

    @classmethod
    def from_rows(cls, rows, base, power=1):
        return cls(tuple(tuple(int(x) for x in row) for row in rows), base, power)

    @property
    def n(self):
        return len(self.entries)

    def integer_array(self):
        return np.array(self.entries, dtype=object)

    def __matmul__(self, other):
        if self.base != other.base:
            raise ValueError("scaled matrices must share a base")
        product = self.integer_array() @ other.integer_array()
        return ScaledIntegerMatrix.from_rows(product, self.base, self.power + other.power)

    def to_array(self):
        return np.array(self.entries, dtype=float) / np.sqrt(float(self.base)) ** self.power

    def is_unitary(self):
        b = self.integer_array()
        scaled_identity = np.eye(self.n, dtype=int).astype(object) * self.base ** self.power
        return bool(np.all(b @ b.T == scaled_identity))

    def support(self):
        return self.integer_array() != 0

    def modulus_one_mask(self, tol=TRANSFER_TOL):
        # |b| / sqrt(base)^power >= 1 - tol, squared to stay in integers
        threshold = self.base ** self.power * (1 - tol) ** 2
        return np.array([[b * b >= threshold for b in row] for row in self.entries], dtype=bool)


def w_k4():
    """The K4-supported orthogonal matrix, sign pattern scaled by 1/sqrt(3)."""
    return ScaledIntegerMatrix.from_rows(W_K4_SIGNS, base=3)


def zero_pattern(matrix, zero_tol=ZERO_TOL):
    if isinstance(matrix, ScaledIntegerMatrix):
        return ZeroPattern.from_mask(matrix.support())
    return ZeroPattern.from_mask(np.abs(np.asarray(matrix)) > zero_tol)


class _NumericPowers:
    def __init__(self, matrix, zero_tol):
        self.matrix = np.asarray(matrix, dtype=complex)
        self.zero_tol = zero_tol

    def check(self):
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {m.shape}")
        if np.max(np.abs(m @ m.conj().T - np.eye(m.shape[0]))) > UNITARY_TOL:
            raise ValueError("input matrix is not unitary")

    def pattern(self, power):
        return zero_pattern(power, self.zero_tol)

    def hits(self, power):
        return np.abs(power) >= 1 - float(TRANSFER_TOL)


class _ExactPowers:
    def __init__(self, matrix):
        self.matrix = matrix

    def check(self):
        if not self.matrix.is_unitary():
            raise ValueError("scaled integer matrix is not orthogonal")

    def pattern(self, power):
        return zero_pattern(power)

    def hits(self, power):
        return power.modulus_one_mask()


def probability_transfer_search(matrix, max_steps, zero_tol=ZERO_TOL):
    """
    Walk W, W^2, ..., W^max_steps. Stops at the first power with an
    off-diagonal entry of modulus one and reports it as (step, i, j),
    where i is the source column and j the target row. Distinct zero
    patterns are collected in order of first appearance.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be positive, got {max_steps!r}")
    if isinstance(matrix, ScaledIntegerMatrix):
        walker = _ExactPowers(matrix)
    else:
        walker = _NumericPowers(matrix, zero_tol)
    walker.check()

    patterns, seen = [], set()
    power = walker.matrix
    for step in range(1, max_steps + 1):
        if step > 1:
            power = power @ walker.matrix
        pattern = walker.pattern(power)
        if pattern not in seen:
            seen.add(pattern)
            patterns.append(pattern)
            logger.debug("step %d: new zero pattern\n%s", step, pattern)
        hits = walker.hits(power)
        np.fill_diagonal(hits, False)
        if hits.any():
            targets, sources = np.nonzero(hits)
            order = np.lexsort((targets, sources))[0]
            hit = (step, int(sources[order]) + 1, int(targets[order]) + 1)
            logger.info("perfect probability transfer at step %d from %d to %d", *hit)
            return ProbabilityTransferResult(step, hit, patterns)
    return ProbabilityTransferResult(max_steps, None, patterns)
