"""Convergence bounds for Fuss-Catalan series.

The single quantity everything turns on is the d'Alembert ratio limit
``rho(mu) = |mu|^mu |1-mu|^(1-mu)``: a one-variable series in z with exponent
mu converges absolutely iff ``|z| <= 1/rho(mu)``, boundary included.  For
several exponents mu_1 <= ... <= mu_k only two general bounds are known:

* necessary, per coordinate: ``|z_j| <= 1/rho(mu_j)`` (a hypercuboid);
* sufficient, on the 1-norm: ``sum |z_j| <= 1/rho(mu_*)`` where mu_* is the
  extreme exponent farthest from 1/2 (a simplex).

The historically weaker 1/k-scaled sufficient bound and the measure bounds
derived from the two regions are also provided for cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateExponentError

__all__ = [
    "BoxBound",
    "SimplexBound",
    "ratio_limit",
    "asymptotic_fc",
    "necessary_box",
    "sufficient_simplex",
    "trinomial_radius",
    "mellin_bound",
    "measure_bounds",
]


@dataclass(frozen=True)
class BoxBound:
    """Per-coordinate amplitude caps |z_j|_max (the hypercuboid vertices)."""

    per_coordinate_max: tuple[float, ...]

    def __iter__(self):
        return iter(self.per_coordinate_max)

    def __getitem__(self, j):
        return self.per_coordinate_max[j]


@dataclass(frozen=True)
class SimplexBound:
    """1-norm radius of guaranteed absolute convergence, with the binding exponent."""

    radius: float
    mu_star: float


def _check_exponent(mu: float) -> float:
    mu = float(mu)
    if mu == 0.0 or mu == 1.0:
        raise DegenerateExponentError(f"exponent mu={mu} is degenerate (0 or 1)")
    return mu


def ratio_limit(mu) -> float:
    """Asymptotic coefficient ratio |mu|^mu |1-mu|^(1-mu) of the series in z."""
    mu = _check_exponent(mu)
    return abs(mu) ** mu * abs(1.0 - mu) ** (1.0 - mu)


def asymptotic_fc(mu, r, t: int) -> float:
    """Stirling estimate of the degree-t coefficient for exponent mu, power r.

    Relative accuracy improves like 1/t; about 2% by t = 40 for desk-scale
    parameters.  Computed in log space to survive large t.
    """
    mu = _check_exponent(mu)
    r = float(r)
    if t < 1:
        raise ValueError("t >= 1 required")
    if r == 0.0:
        return 0.0
    ln = (
        math.log(abs(r))
        - 0.5 * math.log(2.0 * math.pi)
        - 1.5 * math.log(t)
        + (r - 0.5) * math.log(abs(mu))
        - (r + 0.5) * math.log(abs(1.0 - mu))
        + t * math.log(ratio_limit(mu))
    )
    return math.copysign(math.exp(ln), r)


def necessary_box(mu: Sequence[float]) -> BoxBound:
    """Per-coordinate caps 1/rho(mu_j); each cap is attained on its axis."""
    return BoxBound(tuple(1.0 / ratio_limit(m) for m in mu))


def _mu_star(mus: Sequence[float]) -> float:
    lo, hi = min(mus), max(mus)
    # Farthest extreme from 1/2; ties go to the upper exponent.
    if abs(lo - 0.5) > abs(hi - 0.5):
        return lo
    return hi


def sufficient_simplex(mu: Sequence[float]) -> SimplexBound:
    """1-norm radius min(1/rho(mu_min), 1/rho(mu_max)) with its binding mu_*."""
    mus = [float(m) for m in mu]
    lo, hi = min(mus), max(mus)
    radius = min(1.0 / ratio_limit(lo), 1.0 / ratio_limit(hi))
    return SimplexBound(radius=radius, mu_star=_mu_star(mus))


def trinomial_radius(mu) -> float:
    """Exact radius for a single exponent: convergence iff |z| <= 1/rho(mu), closed."""
    return 1.0 / ratio_limit(mu)


def mellin_bound(mu: Sequence[float]) -> float:
    """Per-coordinate cap (1/k) min(1/rho(mu_min), 1/rho(mu_max)).

    Historical bound; always at most the simplex radius and superseded by it.
    """
    mus = [float(m) for m in mu]
    return sufficient_simplex(mus).radius / len(mus)


def measure_bounds(mu: Sequence[float]) -> tuple[float, float]:
    """(lower, upper) bounds on the Lebesgue measure of the amplitude image.

    Upper: volume of the hypercuboid.  Lower: volume of the simplex.  They
    coincide for k = 1.
    """
    mus = [float(m) for m in mu]
    k = len(mus)
    upper = 1.0
    for m in mus:
        upper /= ratio_limit(m)
    lower = (1.0 / ratio_limit(_mu_star(mus))) ** k / math.factorial(k)
    return lower, upper
