from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class TrigPolynomial:
    """
    f(t) = sum over terms of coeff * e^{-i lam t}.

    Coefficients come from real symmetric projectors, so they are exact
    real rationals; the imaginary part of every coefficient is zero.
    """
    terms: Tuple[Tuple[int, Fraction], ...]  # descending lam, nonzero coeffs

    def __post_init__(self):
        lams = [lam for lam, _ in self.terms]
        if len(set(lams)) != len(lams):
            raise ValueError(f"repeated frequency in {self.terms}")

    @classmethod
    def from_mapping(cls, mapping):
        terms = tuple((int(lam), Fraction(c)) for lam, c in sorted(mapping.items(), reverse=True) if c != 0)
        return cls(terms)

    @property
    def frequencies(self):
        return [lam for lam, _ in self.terms]

    def coefficient(self, lam):
        return dict(self.terms).get(lam, Fraction(0))

    def at_zero(self):
        return sum((c for _, c in self.terms), Fraction(0))

    def evaluate(self, t):
        t = np.asarray(t, dtype=float)
        if not self.terms:
            return np.zeros_like(t, dtype=complex)
        lams = np.array([lam for lam, _ in self.terms], dtype=float)
        coeffs = np.array([float(c) for _, c in self.terms])
        phases = np.exp(-1j * np.multiply.outer(t, lams))
        return phases @ coeffs

    def modulus(self, t):
        return np.abs(self.evaluate(t))

    def vanishing_order(self):
        """
        Order of the zero of f at t = 0. For an off-diagonal entry of a
        connected graph this is the distance between the two vertices,
        since sum_lam c_lam lam^k = (A^k)_{ij}.
        """
        if not self.terms:
            return None
        k = 0
        while True:
            moment = sum(c * lam ** k for lam, c in self.terms)
            if moment != 0:
                return k
            k += 1
            if k > 2 * len(self.terms) + 1:
                return None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for lam, c in self.terms:
            exponent = "" if lam == 0 else f"e^{{{-lam}it}}"
            magnitude = abs(c)
            coeff = str(magnitude) if (magnitude != 1 or not exponent) else ""
            body = f"{coeff}{'*' if coeff and exponent else ''}{exponent}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)
