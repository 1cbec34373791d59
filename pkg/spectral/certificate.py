import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

import numpy as np

from graphs.graph import max_degree
from spectral.charpoly import char_poly, expand_roots, format_polynomial, poly_eval, synthetic_division
from utils.config import CLUSTER_TOL
from utils.errors import CertificateError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegralCertificate:
    roots: Tuple[Tuple[int, int], ...]  # (lambda, multiplicity), descending lambda
    charpoly: Tuple[int, ...]

    @property
    def eigenvalues(self):
        return [lam for lam, _ in self.roots]

    @property
    def spectrum(self):
        return dict(self.roots)

    @property
    def n(self):
        return sum(m for _, m in self.roots)

    def multiplicity(self, lam):
        return self.spectrum.get(lam, 0)

    def check(self, edge_count=None):
        lams = self.eigenvalues
        if len(set(lams)) != len(lams):
            raise CertificateError(f"duplicate eigenvalue in certificate {self.roots}")
        if any(m <= 0 for _, m in self.roots):
            raise CertificateError("multiplicities must be positive")
        if expand_roots(self.spectrum) != tuple(self.charpoly):
            raise CertificateError("root list does not reproduce the characteristic polynomial")
        if sum(m * lam for lam, m in self.roots) != 0:
            raise CertificateError("eigenvalues do not sum to trace(A) = 0")
        if edge_count is not None and sum(m * lam * lam for lam, m in self.roots) != 2 * edge_count:
            raise CertificateError("sum of squared eigenvalues differs from 2|E|")
        return True

    def is_symmetric(self):
        spectrum = self.spectrum
        return all(spectrum.get(-lam) == m for lam, m in spectrum.items())

    def render(self):
        return " ".join(f"{lam}:{m}" for lam, m in self.roots)

    def to_dict(self):
        return {
            'integral': True,
            'roots': [{'lambda': lam, 'multiplicity': m} for lam, m in self.roots],
            'charpoly': list(self.charpoly),
        }


@dataclass(frozen=True)
class NotIntegral:
    """Integer roots that did split off, plus the factor with no integer roots."""
    roots: Tuple[Tuple[int, int], ...]
    residual: Tuple[int, ...]
    charpoly: Tuple[int, ...]

    def render(self):
        return f"not integral; residual {format_polynomial(self.residual)}"

    def to_dict(self):
        return {
            'integral': False,
            'roots': [{'lambda': lam, 'multiplicity': m} for lam, m in self.roots],
            'residual': list(self.residual),
            'charpoly': list(self.charpoly),
        }


CertificateResult = Union[IntegralCertificate, NotIntegral]


@lru_cache(maxsize=128)
def integral_certificate(graph) -> CertificateResult:
    coeffs = list(char_poly(graph))
    bound = max_degree(graph)
    roots = []
    for lam in range(bound, -bound - 1, -1):
        mult = 0
        while len(coeffs) > 1:
            quotient, remainder = synthetic_division(coeffs, lam)
            if remainder != 0:
                break
            coeffs = quotient
            mult += 1
        if mult:
            roots.append((lam, mult))

    charpoly = char_poly(graph)
    if len(coeffs) > 1:
        logger.info("%s is not integral; residual %s", graph.label(), format_polynomial(coeffs))
        return NotIntegral(tuple(roots), tuple(coeffs), charpoly)

    cert = IntegralCertificate(tuple(roots), charpoly)
    cert.check(graph.edge_count)
    for lam, _ in cert.roots:
        assert poly_eval(charpoly, lam) == 0
    return cert


def is_integral(graph):
    return isinstance(integral_certificate(graph), IntegralCertificate)


def require_integral(graph):
    cert = integral_certificate(graph)
    if not isinstance(cert, IntegralCertificate):
        raise CertificateError(f"{graph.label()} is not integral ({cert.render()})")
    return cert


def cluster_eigenvalues(eigenvalues, tol=CLUSTER_TOL):
    """Group numerical eigenvalues onto nearby integers; None if any is not near one."""
    clusters = {}
    for value in eigenvalues:
        nearest = int(round(float(value)))
        if abs(value - nearest) > tol:
            return None
        clusters[nearest] = clusters.get(nearest, 0) + 1
    return clusters


def numeric_spectrum_matches(cert, decomposition, tol=1e-8):
    """Cross-check exact roots against numerical eigenvalues."""
    expected = np.array([lam for lam, m in cert.roots for _ in range(m)], dtype=float)
    if len(expected) != decomposition.n:
        return False
    return bool(np.max(np.abs(np.sort(expected)[::-1] - decomposition.eigenvalues)) <= tol)
