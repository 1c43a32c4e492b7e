"""Membership in the domain of absolute convergence, and its boundary.

A pivot's amplitude tuple (|b_j|) lies in the domain iff, walking the
straight ray from the origin to the point, no active discriminant family
member changes sign before the point is reached (the amplitude image of a
complete Reinhardt domain contains the whole ray, so the ray test is exact).
Which members are active follows from their behavior at the origin:

* some member nonzero at the origin -> every member is active;
* all zero at the origin -> only members with a constrained local extremum
  at the origin are active, saddle members never bound the domain;
* odd pivot span -> the plus and minus families coincide, keep the plus one.

Along a ray the member restricts to an exact univariate polynomial
g(s) = Psi(s * point), so crossings are polynomial roots: sign changes are
odd-multiplicity roots, tangencies even ones.  Tangencies do not expel the
point but are flagged on_boundary when they sit at the point itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import convergence, fc
from .branchcut import cis, cpow
from .discriminant import OriginClass, PsiFamily, PsiMember
from .errors import IndeterminateOrigin, NoActiveBoundary

__all__ = [
    "DomainVerdict",
    "EmpiricalVerdict",
    "active_members",
    "member",
    "boundary_on_ray",
    "trace_level_set",
    "trace_csv",
    "empirical_convergence",
    "log_convexity_probe",
]

_BOUNDARY_RTOL = 1e-9


@dataclass(frozen=True)
class DomainVerdict:
    inside: bool
    binding: tuple | None      # (member_id, crossing scale) when a crossing decided it
    on_boundary: bool


class EmpiricalVerdict(Enum):
    CONVERGES = "converges"
    DIVERGES = "diverges"
    BORDERLINE = "borderline"


def active_members(family: PsiFamily) -> list[PsiMember]:
    """Members whose level sets can bound the domain, per origin classification."""
    odd = (family.pivot[1] - family.pivot[0]) % 2 == 1
    pool = [m for m in family.members if m.qsign > 0] if odd else list(family.members)
    if any(m.origin_class is OriginClass.NONZERO_CONSTANT for m in pool):
        return pool
    if any(m.origin_class is OriginClass.INDETERMINATE for m in pool):
        bad = [m.member_id for m in pool if m.origin_class is OriginClass.INDETERMINATE]
        raise IndeterminateOrigin(f"members {bad} could not be classified at the origin")
    act = [m for m in pool if m.origin_class in (OriginClass.LOCAL_MAX, OriginClass.LOCAL_MIN)]
    if not act:
        raise NoActiveBoundary(
            f"pivot {family.pivot}: every member has a saddle at the origin"
        )
    return act


def _real_positive_roots(coeffs_ascending: Sequence[float]) -> list[float]:
    """Real roots s > 0 of g(s) given ascending coefficients, Newton-polished."""
    c = [float(x) for x in coeffs_ascending]
    while c and c[-1] == 0.0:
        c.pop()
    lead_shift = 0
    while c and c[0] == 0.0:
        c.pop(0)
        lead_shift += 1
    if len(c) <= 1:
        return []
    scale = max(abs(x) for x in c)
    c = [x / scale for x in c]

    def g(s):
        acc = 0.0
        for x in reversed(c):
            acc = acc * s + x
        return acc

    def dg(s):
        acc = 0.0
        for k in range(len(c) - 1, 0, -1):
            acc = acc * s + k * c[k]
        return acc

    roots = np.roots(c[::-1])
    out = []
    for z in roots:
        if abs(z.imag) > 1e-8 * (1.0 + abs(z.real)):
            continue
        s = float(z.real)
        if s <= 1e-12:
            continue
        for _ in range(4):
            d = dg(s)
            if d == 0.0:
                break
            step = g(s) / d
            if not math.isfinite(step):
                break
            if abs(step) > 0.1 * max(s, 1e-6):
                break
            s -= step
        if s > 1e-12:
            out.append(s)
    out.sort()
    # merge numerically identical roots
    merged = []
    for s in out:
        if merged and abs(s - merged[-1]) <= 1e-9 * max(1.0, s):
            continue
        merged.append(s)
    return merged


def _crossings(coeffs_ascending, roots):
    """Split root list into (odd multiplicity, even multiplicity) by sign probes."""
    c = [float(x) for x in coeffs_ascending]

    def g(s):
        acc = 0.0
        for x in reversed(c):
            acc = acc * s + x
        return acc

    odd, even = [], []
    for s in roots:
        parity = None
        for h in (1e-6, 1e-5, 1e-4):
            lo, hi = g(s * (1.0 - h)), g(s * (1.0 + h))
            if lo != 0.0 and hi != 0.0:
                parity = (lo > 0) != (hi > 0)
                break
        if parity is None:
            even.append(s)
        elif parity:
            odd.append(s)
        else:
            even.append(s)
    return odd, even


def _box_scale(point, family: PsiFamily) -> tuple:
    """(exit scale of the necessary hypercuboid along the ray, binding slot)."""
    p, q = family.pivot
    scale, slot = math.inf, None
    for j, x in zip(family.free_slots, point):
        if x > 0:
            cap = convergence.trinomial_radius((j - p) / (q - p))
            if cap / x < scale:
                scale, slot = cap / x, j
    return scale, slot


def member(point: Sequence[float], family: PsiFamily) -> DomainVerdict:
    """Decide whether an amplitude tuple lies in the domain of convergence.

    The tuple components follow ``family.free_slots``.  Two conditions must
    hold: no active member changes sign on the open ray segment, and the
    point stays inside the necessary hypercuboid |b_j| <= b_j^ (the family
    criterion alone cannot see box facets whose discriminant zeros sit at
    non-real coefficient values, e.g. a y^3/y^5 pivot with a constant term;
    the box is a necessary condition regardless).  Points on the boundary
    count as inside (the series converge there); a touch at the point after
    an earlier sign change is a disconnected component, hence outside.
    """
    pt = [float(x) for x in point]
    if len(pt) != len(family.free_slots):
        raise ValueError(f"point has {len(pt)} components, family has {len(family.free_slots)}")
    if any(x < 0 for x in pt):
        raise ValueError("amplitudes must be nonnegative")
    if all(x == 0 for x in pt):
        return DomainVerdict(inside=True, binding=None, on_boundary=False)

    first_cross = None
    touch_at_one = False
    for m in active_members(family):
        coeffs = m.poly.ray_coeffs(pt)
        if all(x == 0 for x in coeffs):
            continue
        roots = _real_positive_roots(coeffs)
        odd, even = _crossings(coeffs, roots)
        for s in odd:
            if s > 1.0 + _BOUNDARY_RTOL:
                continue
            if first_cross is None or s < first_cross[1]:
                first_cross = (m.member_id, s)
        for s in even:
            if abs(s - 1.0) <= _BOUNDARY_RTOL:
                touch_at_one = True

    box, box_slot = _box_scale(pt, family)
    if first_cross is None or box < first_cross[1]:
        if box < 1.0 - _BOUNDARY_RTOL:
            return DomainVerdict(inside=False, binding=(f"box:b{box_slot}", box), on_boundary=False)
        if box <= 1.0 + _BOUNDARY_RTOL:
            return DomainVerdict(inside=True, binding=(f"box:b{box_slot}", box), on_boundary=True)
    if first_cross is None:
        return DomainVerdict(inside=True, binding=None, on_boundary=touch_at_one)
    mid, s = first_cross
    if s >= 1.0 - _BOUNDARY_RTOL:
        return DomainVerdict(inside=True, binding=(mid, s), on_boundary=True)
    return DomainVerdict(inside=False, binding=(mid, s), on_boundary=False)


def boundary_on_ray(direction: Sequence[float], family: PsiFamily) -> float:
    """Smallest scale at which the domain boundary is hit along the ray.

    The first vanishing of any active member (any multiplicity), or the exit
    of the necessary hypercuboid where that comes sooner; Newton-polished to
    ~1e-12 relative.  +inf when nothing binds within twice the hypercuboid.
    """
    d = [float(x) for x in direction]
    if len(d) != len(family.free_slots) or all(x == 0 for x in d):
        raise ValueError("direction must be a nonzero tuple over the family's free slots")
    box, _ = _box_scale(d, family)
    best = math.inf
    for m in active_members(family):
        coeffs = m.poly.ray_coeffs(d)
        for s in _real_positive_roots(coeffs):
            if s < best:
                best = s
            break  # roots sorted ascending; only the first matters
    best = min(best, box)
    return best if best <= 2.0 * box else math.inf


# ---------------------------------------------------------------------------
# level-set tracing (marching squares)


def trace_level_set(poly, window, grid: int, var_pair=None, fixed=None):
    """Zero level set of a two-variable member over a rectangular window.

    Returns ordered polylines as lists of (x, y).  ``poly`` may be a
    PsiMember or a raw MultiPoly; extra variables must be pinned via
    ``fixed`` (name -> value).  Cells are scanned row-major, so the result
    is deterministic.
    """
    if isinstance(poly, PsiMember):
        poly = poly.poly
    fixed = dict(fixed or {})
    names = [v for v in poly.vars if v not in fixed]
    if var_pair is not None:
        names = list(var_pair)
    if len(names) != 2:
        raise ValueError(f"need exactly 2 free variables, have {names}")
    x0, x1, y0, y1 = (float(v) for v in window)
    n = int(grid)
    if n < 2:
        raise ValueError("grid must be at least 2")
    xs = np.linspace(x0, x1, n + 1)
    ys = np.linspace(y0, y1, n + 1)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    vals = np.zeros_like(gx)
    for e, c in poly.terms.items():
        term = float(c)
        skip = False
        t = np.full_like(gx, term)
        for name, ex in zip(poly.vars, e):
            if ex == 0:
                continue
            if name in fixed:
                t = t * (float(fixed[name]) ** ex)
            elif name == names[0]:
                t = t * gx ** ex
            elif name == names[1]:
                t = t * gy ** ex
            else:
                skip = True
                break
        if not skip:
            vals = vals + t

    # nudge exact zeros so every cell has a clean sign pattern
    tiny = 1e-30 + 1e-14 * float(np.max(np.abs(vals)) or 1.0)
    vals = np.where(vals == 0.0, tiny, vals)

    def interp(xa, ya, va, xb, yb, vb):
        t = va / (va - vb)
        return (xa + t * (xb - xa), ya + t * (yb - ya))

    segments = []
    for i in range(n):
        for j in range(n):
            v = [vals[i, j], vals[i + 1, j], vals[i + 1, j + 1], vals[i, j + 1]]
            pos = [x > 0 for x in v]
            case = pos[0] * 1 + pos[1] * 2 + pos[2] * 4 + pos[3] * 8
            if case in (0, 15):
                continue
            corners = [
                (xs[i], ys[j]), (xs[i + 1], ys[j]), (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1]),
            ]
            edge_pts = {}
            for k in range(4):
                a, b = k, (k + 1) % 4
                if pos[a] != pos[b]:
                    edge_pts[k] = interp(*corners[a], v[a], *corners[b], v[b])
            if case in (5, 10):  # saddle cell: split by center sign
                center = float(np.mean(v))
                if (center > 0) == pos[0]:
                    pairs = [(0, 1), (2, 3)]
                else:
                    pairs = [(0, 3), (1, 2)]
            else:
                pairs = []
                ks = sorted(edge_pts)
                for a_idx in range(0, len(ks) - 1, 2):
                    pairs.append((ks[a_idx], ks[a_idx + 1]))
            for a, b in pairs:
                if a in edge_pts and b in edge_pts:
                    segments.append((edge_pts[a], edge_pts[b]))

    return _chain_segments(segments, max(abs(x1 - x0), abs(y1 - y0)))


def _chain_segments(segments, scale):
    """Join segments that share endpoints into ordered polylines."""
    def key(pt):
        return (round(pt[0] / scale, 9), round(pt[1] / scale, 9))

    links: dict = {}
    for idx, (a, b) in enumerate(segments):
        links.setdefault(key(a), []).append((idx, 0))
        links.setdefault(key(b), []).append((idx, 1))
    used = [False] * len(segments)
    polylines = []
    for start in range(len(segments)):
        if used[start]:
            continue
        used[start] = True
        a, b = segments[start]
        chain = [a, b]
        for endpos in (1, 0):  # extend forward then backward
            while True:
                tail = chain[-1] if endpos == 1 else chain[0]
                cands = [
                    (i, e) for (i, e) in links.get(key(tail), []) if not used[i]
                ]
                if not cands:
                    break
                i, e = cands[0]
                used[i] = True
                nxt = segments[i][1 - e]
                if endpos == 1:
                    chain.append(nxt)
                else:
                    chain.insert(0, nxt)
        polylines.append(chain)
    return polylines


def trace_csv(traces: dict) -> str:
    """Serialize {member_id: polylines} deterministically.

    Columns member_id, polyline_id, x, y under the fixed comment header.
    """
    lines = ["# psi level set trace", "member_id,polyline_id,x,y"]
    for mid in sorted(traces):
        for pid, line in enumerate(traces[mid]):
            for (x, y) in line:
                lines.append(f"{mid},{pid},{x!r},{y!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# empirical cross-validation


def _default_schedule():
    return [2 ** k for k in range(6, 13)]


def empirical_convergence(eq, pivot, ell: int, schedule=None) -> EmpiricalVerdict:
    """Numerical convergence verdict for one branch, independent of the criterion.

    Sums the branch series level by level, watching the level magnitudes:
    sustained growth means divergence; decay plus a small residual of the
    summed root in the original equation means convergence; anything else is
    borderline.
    """
    from . import algebraic

    schedule = sorted(schedule or _default_schedule())
    T_max = schedule[-1]
    scaled = algebraic.scale_equation(eq, pivot)
    span = scaled.branch_count
    if not 0 <= ell < span:
        raise ValueError(f"branch {ell} outside 0..{span - 1}")
    slots = sorted(scaled.b)
    if not slots:
        return EmpiricalVerdict.CONVERGES
    mu_vec = [scaled.mu[j] for j in slots]
    angle = math.pi * (2 * ell + 1)
    z_vec = [cis(angle * float(scaled.mu[j])) * scaled.b[j] for j in slots]
    levels = fc._series_levels(mu_vec, Fraction(1, span), z_vec, T_max)
    ln_abs = levels.ln_abs_sums

    if max(ln_abs) > 60.0:  # level magnitudes past e^60: unambiguous growth
        return EmpiricalVerdict.DIVERGES
    window = [v for v in ln_abs[T_max // 2:] if v > -math.inf]
    if len(window) >= 8:
        slope = (window[-1] - window[0]) / (len(window) - 1)
        if slope > 0.002:
            return EmpiricalVerdict.DIVERGES
    else:
        slope = -math.inf  # series terminated or collapsed to zero levels

    value = 0j
    comp = 0j
    for v in levels.values:
        y = v - comp
        t = value + y
        comp = (t - value) - y
        value = t
    p, q = scaled.pivot.p, scaled.pivot.q
    ratio = eq.coeffs[p] / eq.coeffs[q]
    prefactor = cis(angle / span) * cpow(ratio, 1.0 / span)
    x = prefactor * value
    res = algebraic.residual(eq, x)
    if slope < -0.002 and res < 1e-6:
        return EmpiricalVerdict.CONVERGES
    return EmpiricalVerdict.BORDERLINE


def log_convexity_probe(p1: Sequence[float], p2: Sequence[float], family: PsiFamily,
                        samples: int = 32) -> bool:
    """Check component-wise geometric interpolates of two interior points stay inside."""
    a = [float(x) for x in p1]
    b = [float(x) for x in p2]
    if any(x <= 0 for x in a + b):
        raise ValueError("log-convexity probe needs strictly positive amplitudes")
    for pt, name in ((a, "p1"), (b, "p2")):
        v = member(pt, family)
        if not (v.inside or v.on_boundary):
            raise ValueError(f"{name} is not inside the domain")
    for i in range(samples):
        t = i / (samples - 1)
        mid = [x ** t * y ** (1.0 - t) for x, y in zip(a, b)]
        v = member(mid, family)
        if not (v.inside or v.on_boundary):
            return False
    return True
