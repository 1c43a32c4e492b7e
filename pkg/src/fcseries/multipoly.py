"""Exact multivariate polynomials over arbitrary-precision integers.

Small, dict-backed, and immutable by convention: a polynomial is a mapping
from exponent vectors (one slot per variable) to nonzero int coefficients.
Enough arithmetic for resultants via fraction-free elimination, plus the
substitutions the discriminant families need (sign flips, constants, rays).

Canonical text form, used by golden tests: one term per line,
``coef * v0^e0 * v1^e1 ...`` with every variable listed, terms sorted by
exponent vector descending.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, int] | None = None):
        self.vars = tuple(variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables, {})

    @classmethod
    def const(cls, variables, c: int):
        variables = tuple(variables)
        if c == 0:
            return cls.zero(variables)
        return cls(variables, {tuple([0] * len(variables)): int(c)})

    @classmethod
    def var(cls, variables, name: str, coef: int = 1):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): int(coef)})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError("variable universes differ")
            return other
        return MultiPoly.const(self.vars, other)

    # -- ring operations ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.vars, other)
        return isinstance(other, MultiPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            self, other = other, self
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- leading terms and exact division -----------------------------------

    def _lead(self):
        """(exponents, coef) of the lexicographically largest monomial."""
        e = max(self.terms)
        return e, self.terms[e]

    def exact_div(self, d: "MultiPoly | int") -> "MultiPoly":
        """Quotient self / d, valid only when the division is exact."""
        if isinstance(d, int):
            if d == 0:
                raise ZeroDivisionError("division by zero polynomial")
            out = {}
            for e, c in self.terms.items():
                q, rem = divmod(c, d)
                if rem:
                    raise ValueError("inexact integer division in exact_div")
                out[e] = q
            return MultiPoly(self.vars, out)
        d = self._coerce(d)
        if not d:
            raise ZeroDivisionError("division by zero polynomial")
        r = self
        qterms: dict[tuple, int] = {}
        de, dc = d._lead()
        while r:
            re_, rc = r._lead()
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(x < 0 for x in qe):
                raise ValueError("inexact polynomial division in exact_div")
            qc, rem = divmod(rc, dc)
            if rem:
                raise ValueError("inexact polynomial division in exact_div")
            qterms[qe] = qterms.get(qe, 0) + qc
            r = r - MultiPoly(self.vars, {qe: qc}) * d
        return MultiPoly(self.vars, qterms)

    # -- substitutions -------------------------------------------------------

    def evaluate(self, values: Mapping[str, complex]):
        """Full evaluation; exact with int/Fraction inputs, numeric otherwise."""
        vals = [values[name] for name in self.vars]
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, x in zip(vals, e):
                if x:
                    term = term * v ** x
            total = total + term
        return total

    def substitute_scalars(self, assign: Mapping[str, int]) -> "MultiPoly":
        """Replace some variables by integer constants; result keeps all slots."""
        pos = {name: self.vars.index(name) for name in assign}
        out: dict[tuple, int] = {}
        for e, c in self.terms.items():
            coef = c
            newe = list(e)
            dead = False
            for name, v in assign.items():
                i = pos[name]
                if e[i]:
                    if v == 0:
                        dead = True
                        break
                    coef *= int(v) ** e[i]
                newe[i] = 0
            if dead:
                continue
            key = tuple(newe)
            s = out.get(key, 0) + coef
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MultiPoly(self.vars, out)

    def rename(self, mapping: Mapping[str, str], new_vars: Sequence[str]) -> "MultiPoly":
        """Project onto a new variable universe; unmapped slots must be unused."""
        new_vars = tuple(new_vars)
        src = []
        for i, name in enumerate(self.vars):
            if name in mapping:
                src.append((i, new_vars.index(mapping[name])))
        used = {i for i, _ in src}
        out = {}
        for e, c in self.terms.items():
            for i, x in enumerate(e):
                if x and i not in used:
                    raise ValueError(f"variable {self.vars[i]} still present")
            newe = [0] * len(new_vars)
            for i, j in src:
                newe[j] = e[i]
            out[tuple(newe)] = out.get(tuple(newe), 0) + c
        return MultiPoly(new_vars, out)

    def ray_coeffs(self, direction: Sequence) -> list:
        """Coefficients of g(s) = self(s * direction), ascending in s.

        Exact when direction components are ints/Fractions.
        """
        if len(direction) != len(self.vars):
            raise ValueError("direction length mismatch")
        deg = max((sum(e) for e in self.terms), default=0)
        out = [0] * (deg + 1)
        for e, c in self.terms.items():
            term = c
            for d, x in zip(direction, e):
                if x:
                    term = term * d ** x
            out[sum(e)] += term
        return out

    def axis_restriction(self, name: str) -> list:
        """Univariate coefficients along one axis (all other variables zero)."""
        i = self.vars.index(name)
        deg = max((e[i] for e in self.terms), default=0)
        out = [0] * (deg + 1)
        for e, c in self.terms.items():
            if all(x == 0 for j, x in enumerate(e) if j != i):
                out[e[i]] += c
        while out and out[-1] == 0:
            out.pop()
        return out

    # -- content and shape ---------------------------------------------------

    def constant_term(self) -> int:
        return self.terms.get(tuple([0] * len(self.vars)), 0)

    def content_monomial(self) -> tuple:
        """Per-variable minimum exponent over all terms (the monomial content)."""
        if not self.terms:
            return tuple([0] * len(self.vars))
        mins = None
        for e in self.terms:
            mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
        return mins

    def divide_monomial(self, mono: tuple) -> "MultiPoly":
        out = {}
        for e, c in self.terms.items():
            newe = tuple(a - b for a, b in zip(e, mono))
            if any(x < 0 for x in newe):
                raise ValueError("monomial does not divide every term")
            out[newe] = c
        return MultiPoly(self.vars, out)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- formatting ----------------------------------------------------------

    def canonical_str(self) -> str:
        lines = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            parts = [str(c)] + [f"{v}^{x}" for v, x in zip(self.vars, e)]
            lines.append(" * ".join(parts))
        return "\n".join(lines)

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        return "MultiPoly(" + "; ".join(self.canonical_str().splitlines()) + ")"


def det_bareiss(matrix: list[list[MultiPoly]], variables) -> MultiPoly:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    Entries must share one variable universe; every division along the way is
    exact by construction.
    """
    n = len(matrix)
    if n == 0:
        return MultiPoly.const(variables, 1)
    m = [row[:] for row in matrix]
    sign = 1
    prev = MultiPoly.const(variables, 1)
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return MultiPoly.zero(variables)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (pivot * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = MultiPoly.zero(variables)
        prev = pivot
    result = m[n - 1][n - 1]
    return -result if sign < 0 else result
