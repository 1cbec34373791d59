import logging
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import List, Optional

import numpy as np

from dynamics.fidelity import FidelityMax, best_of, max_fidelity_pairs
from dynamics.propagator import entry_series, propagator
from graphs.graph import antipodal_pairs, is_connected, is_regular
from spectral.certificate import IntegralCertificate, integral_certificate
from utils.config import DEFAULT_PST_TOL, DEFAULT_REFINE_TOL, NON_INTEGRAL_WINDOW
from utils.errors import CertificateError, ConvergenceError, GraphError

logger = logging.getLogger(__name__)

PERIOD_CHECK_TOL = 1e-9


def spectral_gap_gcd(cert):
    lams = cert.eigenvalues
    return reduce(math.gcd, (abs(a - b) for a in lams for b in lams if a != b), 0)


def period(graph, cert=None):
    """
    Smallest common revival time 2*pi/g, g the gcd of all eigenvalue
    differences. A single distinct eigenvalue (no edges) revives
    trivially; 2*pi is reported for it.
    """
    if cert is None:
        cert = integral_certificate(graph)
    if not isinstance(cert, IntegralCertificate):
        raise CertificateError(f"{graph.label()} is not integral; no period exists")
    g = spectral_gap_gcd(cert)
    t = 2 * math.pi / g if g else 2 * math.pi
    diagonal = np.abs(np.diag(propagator(graph, t)))
    if np.min(diagonal) < 1 - PERIOD_CHECK_TOL:
        raise ConvergenceError(
            f"{graph.label()}: |U(period)| diagonal drops to {np.min(diagonal):.3e} below 1")
    return t


def default_window(graph, cert=None):
    if cert is None:
        cert = integral_certificate(graph)
    if isinstance(cert, IntegralCertificate):
        return period(graph, cert)
    return NON_INTEGRAL_WINDOW


@dataclass
class PstReport:
    graph: str
    is_regular: Optional[int]
    is_integral: bool
    is_periodic: bool
    period: Optional[float]
    best: FidelityMax
    pst_tol: float
    pairs: List[FidelityMax] = field(default_factory=list)

    @property
    def verdict(self):
        return "PST" if self.best.f_star >= 1 - self.pst_tol else "no-PST"

    def pst_pairs(self):
        return [r for r in self.pairs if r.f_star >= 1 - self.pst_tol]

    def to_dict(self, include_pairs=True):
        data = {
            'graph': self.graph,
            'regular': self.is_regular,
            'integral': self.is_integral,
            'periodic': self.is_periodic,
            'period': self.period,
            'best': self.best.to_dict(),
            'verdict': self.verdict,
        }
        if include_pairs:
            data['pairs'] = [
                {'i': r.pair[0], 'j': r.pair[1], 't_star': r.t_star, 'f_star': r.f_star}
                for r in self.pairs
            ]
        return data


def pst_report(graph, t_max=None, grid=None, refine_tol=DEFAULT_REFINE_TOL, pst_tol=DEFAULT_PST_TOL):
    if not is_connected(graph):
        raise GraphError(f"{graph.label()} is disconnected; PST analysis needs a connected graph")
    if graph.n < 2:
        raise GraphError("PST needs at least two vertices")
    cert = integral_certificate(graph)
    integral = isinstance(cert, IntegralCertificate)
    regular = is_regular(graph)
    periodic = regular is not None and integral
    revival = period(graph, cert) if integral else None
    if t_max is None:
        t_max = revival if integral else NON_INTEGRAL_WINDOW

    pairs = [(i, j) for i in range(1, graph.n + 1) for j in range(i + 1, graph.n + 1)]
    results = max_fidelity_pairs(graph, pairs, t_max, grid, refine_tol)
    best = best_of(results)
    report = PstReport(graph.label(), regular, integral, periodic, revival, best, pst_tol, results)
    if pst_tol / 10 < 1 - best.f_star < 10 * pst_tol:
        logger.warning("%s: best fidelity %.12f sits next to the PST threshold", graph.label(), best.f_star)
    logger.info("%s: %s, best pair %s f*=%.9f t*=%.9f", graph.label(), report.verdict,
                best.pair, best.f_star, best.t_star)
    return report


def pst_antipodal_check(graph, report):
    """True when every PST pair in the report is a pair of antipodal vertices."""
    antipodes = set(antipodal_pairs(graph))
    return all(r.pair in antipodes for r in report.pst_pairs())


def strongly_cospectral(graph, cert, projectors, i, j):
    """Columns i and j of every E_lam agree up to a sign, exactly."""
    i, j = graph.check_vertex(i), graph.check_vertex(j)
    if not isinstance(cert, IntegralCertificate):
        raise CertificateError("strong cospectrality is decided on integral graphs only")
    for proj in projectors:
        col_i = proj.E[:, i - 1]
        col_j = proj.E[:, j - 1]
        if not (np.all(col_i == col_j) or np.all(col_i == -col_j)):
            return False
    return True


def hypercube_antipodal_modulus(k, t):
    return np.abs(np.sin(t)) ** k


def p3_grid_antipodal_modulus(k, t):
    return np.sin(np.asarray(t) / math.sqrt(2)) ** (2 * k)


def family_formula_deviation(graph, formula, t_max=2 * math.pi, samples=1000):
    """
    Largest gap between |U(t)[1, n]| and a closed-form modulus over a
    uniform sample of [0, t_max]. Vertex n is the antipode of vertex 1 in
    the row-major product orderings.
    """
    times = np.linspace(0.0, t_max, samples)
    observed = np.abs(entry_series(graph, 1, graph.n, times))
    return float(np.max(np.abs(observed - formula(times))))
