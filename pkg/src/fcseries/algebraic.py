"""Series solutions for roots of algebraic equations via pivot scaling.

Given a_0 + a_1 x + ... + a_n x^n = 0 (a_0, a_n nonzero) and a pivot pair
p < q with a_p, a_q nonzero, rescaling x and the equation normalizes the two
pivot coefficients to 1.  The scaled coefficients are

    b_j = a_j / (a_p^(1-mu_j) a_q^(mu_j)),     mu_j = (j - p)/(q - p),

and each of the q-p branches ell = 0..q-p-1 carries the root series

    x_ell^r = e^(i pi (2ell+1) r/(q-p)) (a_p/a_q)^(r/(q-p))
              * B(mu; r/(q-p); z(ell)),    z_j(ell) = e^(i pi (2ell+1) mu_j) b_j.

All fractional powers live on the arg in [0, 2pi) sheet.  A simultaneous
iteration root finder supplies an independent oracle for every claim.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import fc
from .branchcut import carg, cis, cpow
from .errors import BranchIndexError, NoConvergentCover, OracleFailure, ZeroPivotError

__all__ = [
    "AlgebraicEquation",
    "PivotChoice",
    "ScaledEquation",
    "RootSeriesResult",
    "scale_equation",
    "branch_phases",
    "series_root_power",
    "solve_all",
    "oracle_roots",
    "residual",
]


@dataclass(frozen=True)
class AlgebraicEquation:
    """a_0 + a_1 x + ... + a_n x^n = 0 with a_0 != 0 and a_n != 0, n >= 2."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 3:
            raise ValueError("degree must be at least 2")
        if coeffs[0] == 0:
            raise ValueError("a_0 must be nonzero (factor out roots at zero first)")
        if coeffs[-1] == 0:
            raise ValueError("a_n must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def support(self) -> tuple:
        return tuple(j for j, c in enumerate(self.coeffs) if c != 0)

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class PivotChoice:
    """Slot pair scaled to one; p < q without loss of generality (q < p would
    reproduce the same roots with p and q interchanged)."""

    p: int
    q: int

    def __post_init__(self):
        if not 0 <= self.p < self.q:
            raise ValueError("need 0 <= p < q")

    @property
    def branch_count(self) -> int:
        return self.q - self.p


@dataclass(frozen=True)
class ScaledEquation:
    """Scaled coefficients b_j and exponents mu_j over the nonzero non-pivot slots."""

    pivot: PivotChoice
    b: dict          # slot -> complex, zero coefficients omitted
    mu: dict         # slot -> Fraction, strictly increasing in the slot
    branch_count: int


def _as_pivot(pivot) -> PivotChoice:
    if isinstance(pivot, PivotChoice):
        return pivot
    p, q = pivot
    return PivotChoice(int(p), int(q))


def scale_equation(eq: AlgebraicEquation, pivot) -> ScaledEquation:
    pivot = _as_pivot(pivot)
    p, q = pivot.p, pivot.q
    if q > eq.degree:
        raise ValueError(f"pivot slot {q} beyond degree {eq.degree}")
    ap, aq = eq.coeffs[p], eq.coeffs[q]
    if ap == 0 or aq == 0:
        raise ZeroPivotError(f"pivot slots ({p},{q}) must carry nonzero coefficients")
    span = q - p
    b: dict[int, complex] = {}
    mu: dict[int, Fraction] = {}
    for j, aj in enumerate(eq.coeffs):
        if j in (p, q) or aj == 0:
            continue
        mj = Fraction(j - p, span)
        denom = cpow(ap, 1 - mj) * cpow(aq, mj)
        b[j] = aj / denom
        mu[j] = mj
    return ScaledEquation(pivot=pivot, b=b, mu=mu, branch_count=span)


def branch_phases(pivot) -> list:
    """The q-p branch roots of -1: e^(i pi (2ell+1)/(q-p)), ell ascending."""
    pivot = _as_pivot(pivot)
    span = pivot.branch_count
    return [cis(math.pi * (2 * ell + 1) / span) for ell in range(span)]


@dataclass(frozen=True)
class RootSeriesResult:
    branch: int
    power: float
    value: complex
    truncation: int
    tail_estimate: float
    residual: float
    pivot: tuple = None


def series_root_power(eq: AlgebraicEquation, pivot, ell: int, r, T: int) -> RootSeriesResult:
    """Partial sum for the r-th power of branch ell of the pivot series.

    For r = 1 the result carries the scale-free residual of the original
    equation at the summed value; other powers report residual = nan.
    """
    pivot = _as_pivot(pivot)
    span = pivot.branch_count
    if not 0 <= ell < span:
        raise BranchIndexError(f"branch {ell} outside 0..{span - 1}")
    scaled = scale_equation(eq, pivot)
    slots = sorted(scaled.b)
    mu_vec = [scaled.mu[j] for j in slots]
    angle = math.pi * (2 * ell + 1)
    z_vec = [cis(angle * float(scaled.mu[j])) * scaled.b[j] for j in slots]
    rr = Fraction(r) if isinstance(r, (int, Fraction)) else float(r)
    r_over = rr / span
    series = fc.genfun_multi_eval(mu_vec, r_over, z_vec, T)
    ratio = eq.coeffs[pivot.p] / eq.coeffs[pivot.q]
    prefactor = cis(angle * float(rr) / span) * cpow(ratio, float(rr) / span)
    value = prefactor * series.value
    res = residual(eq, value) if rr == 1 else math.nan
    return RootSeriesResult(
        branch=ell,
        power=float(rr),
        value=value,
        truncation=T,
        tail_estimate=series.tail_estimate * abs(prefactor),
        residual=res,
        pivot=(pivot.p, pivot.q),
    )


def residual(eq: AlgebraicEquation, x: complex) -> float:
    """|P(x)| normalized by sum |a_j| |x|^j; scale-free in both x and the a_j."""
    x = complex(x)
    num = abs(eq(x))
    den = 0.0
    ax = 1.0
    for c in eq.coeffs:
        den += abs(c) * ax
        ax *= abs(x)
    return num / den if den else num


def oracle_roots(eq: AlgebraicEquation, tol: float = 1e-13, maxiter: int = 10_000) -> list:
    """All roots by simultaneous (Weierstrass/Durand-Kerner) iteration.

    Deterministic: starts on a circle sized by the Cauchy bound with a fixed
    angular offset, restarts once with a perturbed radius on stagnation, and
    raises OracleFailure rather than returning unverified values.
    """
    n = eq.degree
    monic = [c / eq.coeffs[-1] for c in eq.coeffs]

    def poly(x: complex) -> complex:
        acc = 0j
        for c in reversed(monic):
            acc = acc * x + c
        return acc

    radius = 1.0 + max(abs(c) for c in monic[:-1])
    for attempt, scale in enumerate((1.0, 1.37, 0.61)):
        xs = [
            scale * radius * cis(2.0 * math.pi * k / n + 0.5 / n + 0.29 * attempt)
            for k in range(n)
        ]
        for _ in range(maxiter):
            delta = 0.0
            for i in range(n):
                num = poly(xs[i])
                den = 1.0 + 0j
                for j in range(n):
                    if j != i:
                        den *= xs[i] - xs[j]
                if den == 0:
                    den = 1e-300
                step = num / den
                xs[i] = xs[i] - step
                delta = max(delta, abs(step))
            if delta < tol:
                break
        if all(residual(eq, x) < 1e-12 for x in xs):
            return sorted(xs, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    raise OracleFailure(
        f"root iteration failed to reach residual 1e-12 after {maxiter} iterations x3 starts"
    )


def _candidate_pivots(eq: AlgebraicEquation):
    support = eq.support
    return [(p, q) for i, p in enumerate(support) for q in support[i + 1:]]


def solve_all(eq: AlgebraicEquation, T_start: int = 50, tail_target: float = 1e-9,
              T_cap: int = 2 ** 16) -> list:
    """Convergent series expressions for all roots, across pivot choices.

    Walks pivot pairs in ascending order; for each pivot whose amplitude
    point passes the discriminant membership test, sums every branch
    (doubling T from ``T_start`` until the tail estimate drops below
    ``tail_target`` or T exceeds ``T_cap``), and matches values against the
    simultaneous-iteration oracle.  Stops once every root is covered;
    raises NoConvergentCover otherwise, carrying whatever was found.
    """
    from . import domain  # deferred: domain imports this module for equations

    from .discriminant import build_family

    targets = oracle_roots(eq)
    matched: dict[int, RootSeriesResult] = {}
    results: list[RootSeriesResult] = []
    n = eq.degree
    for pivot in _candidate_pivots(eq):
        family = build_family(pivot, n, support=eq.support)
        scaled = scale_equation(eq, pivot)
        point = [abs(scaled.b.get(j, 0.0)) for j in family.free_slots]
        verdict = domain.member(point, family)
        if not (verdict.inside or verdict.on_boundary):
            continue
        for ell in range(pivot[1] - pivot[0]):
            T = T_start
            res = series_root_power(eq, pivot, ell, 1, T)
            while res.tail_estimate > tail_target and T < T_cap:
                T *= 2
                res = series_root_power(eq, pivot, ell, 1, T)
            idx = min(range(n), key=lambda i: abs(targets[i] - res.value))
            dist = abs(targets[idx] - res.value)
            near = dist <= 1e-6 * max(1.0, abs(targets[idx]))
            if near and idx not in matched:
                matched[idx] = res
                results.append(res)
        if len(matched) == n:
            return results
    raise NoConvergentCover(
        f"{n - len(matched)} of {n} roots lack a convergent series over all pivots",
        results=results,
        uncovered=n - len(matched),
    )
