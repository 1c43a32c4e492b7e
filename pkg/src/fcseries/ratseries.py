"""Truncated multivariate power series over exact rationals.

Just enough algebra for independent oracles: ring operations truncated at a
total-degree cap, and fractional powers of series with unit constant term via
the generalized binomial expansion (exact, since u = f - 1 has valuation 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping


def binom_frac(alpha: Fraction, m: int) -> Fraction:
    """Generalized binomial coefficient alpha choose m, exact."""
    alpha = Fraction(alpha)
    num = Fraction(1)
    for i in range(m):
        num *= alpha - i
    return num / factorial(m)


class TruncSeries:
    """Series in ``nvars`` variables modulo total degree > ``cap``."""

    __slots__ = ("nvars", "cap", "terms")

    def __init__(self, nvars: int, cap: int, terms: Mapping[tuple, Fraction] | None = None):
        self.nvars = nvars
        self.cap = cap
        self.terms: dict[tuple, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c != 0 and sum(e) <= cap:
                    self.terms[tuple(e)] = c

    @classmethod
    def const(cls, nvars: int, cap: int, c) -> "TruncSeries":
        return cls(nvars, cap, {tuple([0] * nvars): Fraction(c)})

    @classmethod
    def var(cls, nvars: int, cap: int, j: int) -> "TruncSeries":
        e = [0] * nvars
        e[j] = 1
        return cls(nvars, cap, {tuple(e): Fraction(1)})

    def coeff(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def _like(self, terms) -> "TruncSeries":
        return TruncSeries(self.nvars, self.cap, terms)

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.const(self.nvars, self.cap, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            other = TruncSeries.const(self.nvars, self.cap, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self._like({e: c * Fraction(other) for e, c in self.terms.items()})
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > self.cap:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return self._like(out)

    __rmul__ = __mul__

    def pow_int(self, n: int) -> "TruncSeries":
        if n < 0:
            raise ValueError("use pow_frac for negative powers")
        result = TruncSeries.const(self.nvars, self.cap, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def pow_frac(self, alpha) -> "TruncSeries":
        """self**alpha for any rational alpha; constant term must be 1."""
        alpha = Fraction(alpha)
        if alpha.denominator == 1 and alpha >= 0:
            return self.pow_int(int(alpha))
        one = tuple([0] * self.nvars)
        if self.terms.get(one, Fraction(0)) != 1:
            raise ValueError("pow_frac needs constant term exactly 1")
        u = self - 1
        result = TruncSeries.const(self.nvars, self.cap, 1)
        upow = TruncSeries.const(self.nvars, self.cap, 1)
        for m in range(1, self.cap + 1):
            upow = upow * u
            if not upow.terms:
                break
            result = result + binom_frac(alpha, m) * upow
        return result

    def max_abs_diff(self, other: "TruncSeries") -> Fraction:
        keys = set(self.terms) | set(other.terms)
        worst = Fraction(0)
        for e in keys:
            d = abs(self.coeff(e) - other.coeff(e))
            if d > worst:
                worst = d
        return worst
