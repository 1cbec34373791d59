import logging
from collections import defaultdict
from fractions import Fraction

import numpy as np

from dynamics.trig_polynomial import TrigPolynomial
from spectral.certificate import IntegralCertificate
from spectral.eigen import eigendecompose
from utils.errors import CertificateError

logger = logging.getLogger(__name__)


def propagator(graph, t):
    """U(t) = e^{-iAt} = V diag(e^{-i lam t}) V^T."""
    if not np.isfinite(t):
        raise ValueError(f"time must be finite, got {t!r}")
    decomposition = eigendecompose(graph)
    v = decomposition.vectors
    phases = np.exp(-1j * decomposition.eigenvalues * float(t))
    return (v * phases) @ v.T


def pair_weights(decomposition, i, j):
    # [U(t)]_{j,i} = sum_k V[j,k] V[i,k] e^{-i lam_k t}
    v = decomposition.vectors
    return v[j - 1, :] * v[i - 1, :]


def entry_series(graph, i, j, times):
    """Complex samples of [U(t)]_{j,i} over an array of times."""
    i, j = graph.check_vertex(i), graph.check_vertex(j)
    decomposition = eigendecompose(graph)
    weights = pair_weights(decomposition, i, j)
    phases = np.exp(-1j * np.multiply.outer(np.asarray(times, dtype=float), decomposition.eigenvalues))
    return phases @ weights


def fidelity(graph, i, j, t):
    """f_G(i,j;t) = |<j|U(t)|i>|."""
    return float(abs(entry_series(graph, i, j, [t])[0]))


def entry_polynomial(graph, cert, projectors, i, j):
    i, j = graph.check_vertex(i), graph.check_vertex(j)
    if not isinstance(cert, IntegralCertificate):
        raise CertificateError("entry polynomials need an integral certificate")
    if sorted(p.lam for p in projectors) != sorted(cert.eigenvalues):
        raise CertificateError("projectors do not match the certificate eigenvalues")
    return TrigPolynomial.from_mapping({p.lam: p.E[i - 1, j - 1] for p in projectors})


def entry_matrix_classes(graph, projectors):
    """
    Partition vertex pairs by their entry polynomial. Returns a list of
    (TrigPolynomial, [(i, j), ...]) with classes ordered by first pair;
    this reproduces the a_1, a_2, ... labelling of closed-form tables.
    """
    classes = defaultdict(list)
    n = graph.n
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            key = tuple((p.lam, p.E[i - 1, j - 1]) for p in projectors if p.E[i - 1, j - 1] != 0)
            classes[key].append((i, j))
    ordered = sorted(classes.items(), key=lambda item: item[1][0])
    return [(TrigPolynomial(tuple(sorted(key, reverse=True))), pairs) for key, pairs in ordered]


def snapshot_values(projectors, t_multiple_of_pi):
    """
    Exact entries of U(q*pi) for rational q with e^{-i lam q pi} real,
    i.e. q an integer; returns an object matrix of Fractions.
    """
    q = Fraction(t_multiple_of_pi)
    if q.denominator != 1:
        raise ValueError("exact snapshots are only real at integer multiples of pi")
    total = None
    for p in projectors:
        sign = -1 if (p.lam * q.numerator) % 2 else 1
        term = sign * p.E
        total = term if total is None else total + term
    return total
