"""
Cyclic Jacobi eigensolver for the dense real symmetric matrices A(G).

All graphs handled here are small (a few dozen vertices), so the classic
cyclic sweep is fast enough and gives orthonormal eigenvectors to machine
precision, including inside degenerate eigenspaces.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from utils.config import JACOBI_MAX_SWEEPS, JACOBI_TOL
from utils.errors import ConvergenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    eigenvalues: np.ndarray  # descending
    vectors: np.ndarray      # column k pairs with eigenvalues[k]
    sweeps: int = 0

    @property
    def n(self):
        return len(self.eigenvalues)

    def residual(self, matrix):
        a = np.asarray(matrix, dtype=float)
        return float(np.max(np.abs(a @ self.vectors - self.vectors * self.eigenvalues)))

    def orthogonality_defect(self):
        v = self.vectors
        return float(np.max(np.abs(v.T @ v - np.eye(self.n))))


def _off_norm(a):
    return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigh(matrix, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T):
        raise ValueError("jacobi_eigh expects a square symmetric matrix")
    v = np.eye(n)

    sweeps = 0
    off = _off_norm(a)
    while off >= tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge after {max_sweeps} sweeps (off-diagonal norm {off:.3e})")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        off = _off_norm(a)
        logger.debug("Jacobi sweep %d: off-diagonal norm %.3e", sweeps, off)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    v = v[:, order]
    eigenvalues.setflags(write=False)
    v.setflags(write=False)
    return EigenDecomposition(eigenvalues, v, sweeps)


@lru_cache(maxsize=128)
def eigendecompose(graph):
    decomposition = jacobi_eigh(graph.adj)
    logger.debug("eigendecompose %s: %d sweeps", graph.label(), decomposition.sweeps)
    return decomposition
