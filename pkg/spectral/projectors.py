"""
Exact spectral projectors of integral graphs.

For a certified spectrum with distinct eigenvalues lam_1 > ... > lam_r the
projector onto the lam_r eigenspace is the Lagrange interpolant

    E_r = prod_{s != r} (A - lam_s I) / prod_{s != r} (lam_r - lam_s),

computed over the integers and divided once at the end, so every entry is
an exact Fraction. The propagator then reads U(t) = sum_r e^{-i lam_r t} E_r.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np

from spectral.certificate import IntegralCertificate, require_integral
from spectral.charpoly import identity, integer_matrix
from utils.errors import CertificateError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RationalProjector:
    lam: int
    E: np.ndarray  # object dtype, Fraction entries

    @property
    def n(self):
        return self.E.shape[0]

    def trace(self):
        return sum(self.E[k, k] for k in range(self.n))

    def column(self, j):
        return tuple(self.E[:, j - 1])

    def as_float(self):
        return self.E.astype(float)


def fraction_matrix(matrix):
    return np.array([[Fraction(x) for x in row] for row in np.asarray(matrix)], dtype=object)


def exact_equal(a, b):
    return bool(np.all(a == b))


def _lagrange_projector(a, eye, lam, others):
    numerator = eye.copy()
    denominator = 1
    for mu in others:
        numerator = numerator.dot(a - mu * eye)
        denominator *= lam - mu
    return np.array([[Fraction(int(x), denominator) for x in row] for row in numerator], dtype=object)


def verify_projectors(graph, cert, projectors):
    a = fraction_matrix(graph.adj)
    n = graph.n
    eye = fraction_matrix(identity(n))
    total = np.full((n, n), Fraction(0), dtype=object)
    weighted = np.full((n, n), Fraction(0), dtype=object)
    for proj in projectors:
        e = proj.E
        if not exact_equal(e.dot(e), e):
            raise CertificateError(f"E_{proj.lam} is not idempotent")
        if not exact_equal(e, e.T):
            raise CertificateError(f"E_{proj.lam} is not symmetric")
        if not exact_equal(a.dot(e), proj.lam * e):
            raise CertificateError(f"A E_{proj.lam} != {proj.lam} E_{proj.lam}")
        if proj.trace() != cert.multiplicity(proj.lam):
            raise CertificateError(f"trace(E_{proj.lam}) differs from its multiplicity")
        total = total + e
        weighted = weighted + proj.lam * e
    if not exact_equal(total, eye):
        raise CertificateError("projectors do not resolve the identity")
    if not exact_equal(weighted, a):
        raise CertificateError("sum of lam E_lam does not reproduce A")
    return True


def rational_projectors(graph, cert=None):
    if cert is None:
        cert = require_integral(graph)
    if not isinstance(cert, IntegralCertificate):
        raise CertificateError("rational projectors need an integral certificate")
    lams = cert.eigenvalues
    if len(set(lams)) != len(lams):
        raise CertificateError(f"duplicate eigenvalue in certificate {cert.roots}")
    if cert.n != graph.n:
        raise CertificateError(f"certificate covers {cert.n} eigenvalues, graph has {graph.n} vertices")
    return _cached_projectors(graph, cert)


@lru_cache(maxsize=64)
def _cached_projectors(graph, cert) -> Tuple[RationalProjector, ...]:
    a = integer_matrix(graph.adj)
    eye = identity(graph.n)
    lams = cert.eigenvalues
    projectors = []
    for lam in lams:
        others = [mu for mu in lams if mu != lam]
        projectors.append(RationalProjector(lam, _lagrange_projector(a, eye, lam, others)))
    projectors = tuple(projectors)
    verify_projectors(graph, cert, projectors)
    logger.debug("%s: %d exact projectors verified", graph.label(), len(projectors))
    return projectors
