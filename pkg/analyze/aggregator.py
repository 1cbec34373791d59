import logging

import numpy as np

from analyze.models import Finding, GraphResult, TheoremReport
from dynamics.propagator import propagator
from dynamics.pst import pst_report
from graphs.catalog import GOLDEN_MAXIMA, thirteen
from spectral.certificate import cluster_eigenvalues, integral_certificate
from spectral.eigen import eigendecompose
from utils.config import DEFAULT_PST_TOL, DEFAULT_REFINE_TOL, SEPARATION_BOUND
from utils.errors import VerificationError

logger = logging.getLogger(__name__)

PST_KEY = 'cube'
TIME_TOL = 1e-6


def peak_at(graph, t):
    """Largest off-diagonal modulus of U(t)."""
    moduli = np.abs(propagator(graph, t))
    np.fill_diagonal(moduli, 0.0)
    return float(moduli.max())


def _judge(entry, report, pst_tol):
    findings = []
    best = report.best

    def expect(item, ok, value, comment):
        findings.append(Finding(item, value, "Info" if ok else "Critical", comment))

    expect("integral", report.is_integral, report.is_integral, "exact certificate splits over the integers")
    clusters = cluster_eigenvalues(eigendecompose(entry.graph).eigenvalues)
    expect("numeric_spectrum", clusters == integral_certificate(entry.graph).spectrum, clusters,
           "Jacobi eigenvalues cluster onto the certified roots")
    expect("cubic", report.is_regular == 3, report.is_regular, "every vertex has degree 3")
    expect("periodic", report.is_periodic, report.period, "regular and integral")
    if entry.key == PST_KEY:
        expect("pst", best.f_star >= 1 - pst_tol, best.f_star,
               f"PST between {best.pair[0]} and {best.pair[1]} at t={best.t_star:.9f}")
    else:
        expect("separation", best.f_star <= SEPARATION_BOUND, best.f_star,
               f"all-pairs maximum stays at or below {SEPARATION_BOUND}")

    golden = GOLDEN_MAXIMA.get(entry.key)
    if golden is not None:
        published = golden.exact or f"~{golden.value}"
        expect("golden", golden.accepts(best.f_star), best.f_star,
               f"published maximum {published} (tolerance {golden.tol:g})")
        if golden.t_star is not None:
            # the published time must realize the maximum, and the earliest peak cannot come after it
            reached = peak_at(entry.graph, golden.t_star)
            on_time = golden.accepts(reached) and best.t_star <= golden.t_star + TIME_TOL
            expect("golden_time", on_time, best.t_star,
                   f"maximum {published} reached at t={golden.t_star:.9f}")
    return findings


def verify_theorem(grid=None, refine_tol=DEFAULT_REFINE_TOL, pst_tol=DEFAULT_PST_TOL):
    """
    Run the all-pairs PST search on the thirteen cubic integral graphs
    and record, per graph, whether it behaves as the classification says:
    the cube alone has PST and every other maximum is well separated.
    """
    theorem = TheoremReport()
    for entry in thirteen():
        report = pst_report(entry.graph, grid=grid, refine_tol=refine_tol, pst_tol=pst_tol)
        result = GraphResult(entry.key, report, _judge(entry, report, pst_tol))
        theorem.results.append(result)
        for finding in result.failed:
            logger.error("%s: %s check failed (%s)", entry.key, finding.item, finding.value)
    return theorem


def require_verified(theorem):
    for result in theorem.results:
        if result.failed:
            finding = result.failed[0]
            raise VerificationError(f"{result.graph}: {finding.item} check failed: {finding.comment}",
                                    graph=result.graph)
    return theorem
