import logging
from functools import lru_cache

import numpy as np

from utils.errors import ConvergenceError

logger = logging.getLogger(__name__)


def integer_matrix(matrix):
    """Object-dtype copy holding Python ints, so products never overflow."""
    return np.array([[int(x) for x in row] for row in np.asarray(matrix)], dtype=object)


def identity(n, one=1):
    eye = np.full((n, n), 0, dtype=object)
    for k in range(n):
        eye[k, k] = one
    return eye


@lru_cache(maxsize=128)
def char_poly(graph):
    """
    Coefficients of det(xI - A), highest degree first, via the
    Faddeev-LeVerrier recursion in exact integer arithmetic.
    """
    n = graph.n
    a = integer_matrix(graph.adj)
    eye = identity(n)
    m = np.full((n, n), 0, dtype=object)
    coeffs = [1]
    for k in range(1, n + 1):
        m = a.dot(m) + coeffs[-1] * eye
        trace = int(np.trace(a.dot(m)))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise ConvergenceError(f"inexact Faddeev-LeVerrier division at step {k}")
        coeffs.append(quotient)
    return tuple(coeffs)


def poly_eval(coeffs, x):
    value = 0
    for c in coeffs:
        value = value * x + c
    return value


def synthetic_division(coeffs, root):
    """Divide by (x - root); returns (quotient, remainder)."""
    quotient = []
    carry = 0
    for c in coeffs:
        carry = carry * root + c
        quotient.append(carry)
    remainder = quotient.pop()
    return quotient, remainder


def expand_roots(roots):
    """Coefficients of prod (x - lam)^m for a {lam: m} mapping."""
    coeffs = [1]
    for lam, mult in sorted(roots.items(), reverse=True):
        for _ in range(mult):
            shifted = coeffs + [0]
            for k in range(1, len(shifted)):
                shifted[k] -= lam * coeffs[k - 1]
            coeffs = shifted
    return tuple(coeffs)


def format_polynomial(coeffs, var="x"):
    degree = len(coeffs) - 1
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        power = degree - k
        magnitude = abs(c)
        if power == 0:
            body = str(magnitude)
        else:
            monomial = var if power == 1 else f"{var}^{power}"
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"
