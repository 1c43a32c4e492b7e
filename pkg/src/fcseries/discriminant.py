"""Discriminants as exact integer polynomials and their sign-flip families.

The engine computes Res(P, P')/a_n by a Sylvester determinant with
fraction-free elimination.  Two normalizations are exposed:

* ``discriminant_res`` -- Res(P, P')/a_n, the convention under which the
  worked cubic/quartic/quintic expressions in this library's golden tests
  are stated;
* ``discriminant_classical`` -- the textbook (-1)^(n(n-1)/2) Res(P, P')/a_n,
  under which Delta(P(x^m)) = (-1)^(nm(m-1)/2) m^(mn) (a0 an)^(m-1) Delta^m
  holds as printed.

The two differ by sign exactly when n = 2, 3 (mod 4); membership tests are
insensitive to the choice.

For a degree-n equation with pivot slots p < q scaled to (1, +-1) and the
remaining amplitudes |b_j| as variables, the family Psi+-(sigma) collects the
discriminants of all sign-substituted equations.  Members are reduced (their
common monomial content divided out), deduplicated, and classified by their
behavior at the origin of the closed positive orthant; that classification is
what the domain module's boundary criterion consumes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

from .errors import IndeterminateOrigin, InternalConsistencyError
from .multipoly import MultiPoly, det_bareiss

__all__ = [
    "OriginClass",
    "ParityResult",
    "PsiMember",
    "PsiFamily",
    "resultant",
    "discriminant_res",
    "discriminant_classical",
    "generic_discriminant",
    "discriminant_symbolic",
    "build_family",
    "parity_check",
    "origin_classify",
    "power_substitution_check",
]

MAX_DEGREE = 6


class OriginClass(Enum):
    NONZERO_CONSTANT = "nonzero-constant"
    LOCAL_MAX = "local-max"
    LOCAL_MIN = "local-min"
    SADDLE = "saddle"
    INDETERMINATE = "indeterminate"


class ParityResult(Enum):
    IDENTICAL = "identical"
    DISJOINT = "disjoint"


def _entry(c, variables) -> MultiPoly:
    if isinstance(c, MultiPoly):
        return c
    return MultiPoly.const(variables, c)


def resultant(p_coeffs: Sequence, q_coeffs: Sequence, variables) -> MultiPoly:
    """Res(P, Q) via the Sylvester determinant; coefficients ascending by degree."""
    variables = tuple(variables)
    p = [_entry(c, variables) for c in p_coeffs]
    q = [_entry(c, variables) for c in q_coeffs]
    n, m = len(p) - 1, len(q) - 1
    size = n + m
    zero = MultiPoly.zero(variables)
    rows = []
    p_desc = p[::-1]
    q_desc = q[::-1]
    for i in range(m):
        rows.append([zero] * i + p_desc + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + q_desc + [zero] * (size - m - 1 - i))
    return det_bareiss(rows, variables)


def _derivative_coeffs(p_coeffs: Sequence, variables) -> list[MultiPoly]:
    return [_entry(c, variables) * j for j, c in enumerate(p_coeffs) if j >= 1]


def discriminant_res(coeffs: Mapping[int, object], n: int, variables) -> MultiPoly:
    """Res(P, P')/a_n for P = sum_j coeffs[j] x^j of formal degree n.

    ``coeffs`` maps slot -> int constant or MultiPoly; absent slots are zero.
    """
    variables = tuple(variables)
    p = [_entry(coeffs.get(j, 0), variables) for j in range(n + 1)]
    if not p[n]:
        raise ValueError("leading coefficient must be nonzero")
    res = resultant(p, _derivative_coeffs(p, variables), variables)
    return res.exact_div(p[n])


def discriminant_classical(coeffs: Mapping[int, object], n: int, variables) -> MultiPoly:
    d = discriminant_res(coeffs, n, variables)
    return -d if (n * (n - 1) // 2) % 2 else d


_GENERIC_CACHE: dict[int, MultiPoly] = {}


def generic_discriminant(n: int) -> MultiPoly:
    """Res(P, P')/a_n with all of a_0..a_n symbolic; cached per degree."""
    if not 2 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 2..{MAX_DEGREE}")
    if n not in _GENERIC_CACHE:
        variables = tuple(f"a{j}" for j in range(n + 1))
        coeffs = {j: MultiPoly.var(variables, f"a{j}") for j in range(n + 1)}
        _GENERIC_CACHE[n] = discriminant_res(coeffs, n, variables)
    return _GENERIC_CACHE[n]


def discriminant_symbolic(n: int, fixed: Mapping[int, int]) -> MultiPoly:
    """Exact discriminant with slots in ``fixed`` pinned to +-1, rest symbolic.

    Free slots become variables named b<j>.  Paper-printed orientation
    (Res/a_n convention).
    """
    if not 2 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 2..{MAX_DEGREE}")
    for j, v in fixed.items():
        if v not in (1, -1):
            raise ValueError("pivot slots carry +1 or -1")
    free = [j for j in range(n + 1) if j not in fixed]
    variables = tuple(f"b{j}" for j in free)
    generic = generic_discriminant(n)
    pinned = generic.substitute_scalars({f"a{j}": v for j, v in fixed.items()})
    return pinned.rename({f"a{j}": f"b{j}" for j in free}, variables)


@dataclass(frozen=True)
class PsiMember:
    """One reduced, sign-substituted discriminant of a pivot family."""

    member_id: str
    qsign: int
    sigma: tuple
    slots: tuple
    poly: MultiPoly
    content: tuple
    origin_class: OriginClass
    origin_value: int

    def direction(self) -> int:
        """Sign the member keeps near the origin (+1 grows from >=0, -1 from <=0)."""
        if self.origin_class is OriginClass.NONZERO_CONSTANT:
            return 1 if self.origin_value > 0 else -1
        if self.origin_class is OriginClass.LOCAL_MIN:
            return 1
        if self.origin_class is OriginClass.LOCAL_MAX:
            return -1
        raise ValueError(f"{self.member_id} has no sign direction ({self.origin_class})")


@dataclass(frozen=True)
class PsiFamily:
    pivot: tuple
    degree: int
    support: tuple
    free_slots: tuple
    members: tuple            # distinct PsiMember, stable order
    plus_set: dict            # sigma -> member index (qsign = +1)
    minus_set: dict           # sigma -> member index (qsign = -1)
    parity: ParityResult
    sigma_sets_equal: bool    # whether extremum sigma-sets of + and - coincide

    @property
    def variables(self) -> tuple:
        return tuple(f"b{j}" for j in self.free_slots)

    def member_by_id(self, member_id: str) -> PsiMember:
        for m in self.members:
            if m.member_id == member_id:
                return m
        raise KeyError(member_id)

    def find(self, qsign: int, sigma: Sequence[int]) -> PsiMember:
        """Member produced by a given q-slot sign and sigma assignment."""
        table = self.plus_set if qsign > 0 else self.minus_set
        return self.members[table[tuple(sigma)]]


def origin_classify(poly: MultiPoly):
    """(OriginClass, origin value) of a reduced member on the closed positive orthant.

    A nonzero constant term settles it.  Otherwise the lowest-degree
    nonvanishing restriction along each axis and along the all-ones ray gives
    a sign as each variable tends to 0+; all negative means a constrained
    local maximum, all positive a local minimum, mixed a saddle.  No signal
    at all is surfaced as an error, never guessed.
    """
    c = poly.constant_term()
    if c != 0:
        return OriginClass.NONZERO_CONSTANT, c
    signs = []
    for name in poly.vars:
        coeffs = poly.axis_restriction(name)
        lead = next((x for x in coeffs if x != 0), None)
        if lead is not None:
            signs.append(1 if lead > 0 else -1)
    ray = poly.ray_coeffs(tuple([1] * len(poly.vars)))
    lead = next((x for x in ray if x != 0), None)
    if lead is not None:
        signs.append(1 if lead > 0 else -1)
    if not signs:
        raise IndeterminateOrigin("no axis or ray restriction carries a sign near the origin")
    if all(s < 0 for s in signs):
        return OriginClass.LOCAL_MAX, 0
    if all(s > 0 for s in signs):
        return OriginClass.LOCAL_MIN, 0
    return OriginClass.SADDLE, 0


def _member_id(p: int, q: int, qsign: int, sigma: Sequence[int]) -> str:
    pm = "+" if qsign > 0 else "-"
    body = ",".join("+" if s > 0 else "-" for s in sigma)
    return f"psi{pm}_{p}{q}({body})"


def build_family(pivot: tuple, n: int, support: Sequence[int] | None = None) -> PsiFamily:
    """All sign-substituted reduced discriminants for one pivot of a degree-n equation.

    ``support`` lists the slots with nonzero coefficients (default: all);
    slots outside it are zeroed before the discriminant is taken, which is
    how sparse equations such as trinomials specialize.
    """
    p, q = pivot
    if not (0 <= p < q <= n):
        raise ValueError("pivot must satisfy 0 <= p < q <= n")
    if not 2 <= n <= MAX_DEGREE:
        raise ValueError(f"degree {n} outside supported range 2..{MAX_DEGREE}")
    support = tuple(sorted(set(range(n + 1)) if support is None else set(support)))
    if p not in support or q not in support:
        raise ValueError("pivot slots must lie in the support")
    free = tuple(j for j in support if j != p and j != q)
    variables = tuple(f"b{j}" for j in free)

    generic = generic_discriminant(n)
    base_assign = {f"a{j}": 0 for j in range(n + 1) if j not in support}
    base_assign[f"a{p}"] = 1

    members: list[PsiMember] = []
    seen: dict[MultiPoly, int] = {}
    plus_set: dict[tuple, int] = {}
    minus_set: dict[tuple, int] = {}
    origin_abs: set[int] = set()
    unreduced_sets = {1: set(), -1: set()}

    for qsign in (1, -1):
        table = plus_set if qsign > 0 else minus_set
        assign = dict(base_assign)
        assign[f"a{q}"] = qsign
        pinned = generic.substitute_scalars(assign)
        base = pinned.rename({f"a{j}": f"b{j}" for j in free}, variables)
        # Reduce first (divide out the common monomial as a polynomial
        # identity), then sign-substitute into the reduced discriminant.
        content = base.content_monomial()
        base_reduced = base.divide_monomial(content)
        for sigma in itertools.product((1, -1), repeat=len(free)):
            # sigma flips: b_j -> sigma_j * b_j scales each term by sigma_j^e_j
            flips = {f"b{j}": s for j, s in zip(free, sigma)}
            unreduced_sets[qsign].add(_apply_signs(base, flips))
            reduced = _apply_signs(base_reduced, flips)
            if reduced in seen:
                table[sigma] = seen[reduced]
                continue
            try:
                oclass, ovalue = origin_classify(reduced)
            except IndeterminateOrigin:
                oclass, ovalue = OriginClass.INDETERMINATE, 0
            member = PsiMember(
                member_id=_member_id(p, q, qsign, sigma),
                qsign=qsign,
                sigma=sigma,
                slots=free,
                poly=reduced,
                content=content,
                origin_class=oclass,
                origin_value=ovalue,
            )
            idx = len(members)
            members.append(member)
            seen[reduced] = idx
            table[sigma] = idx
            origin_abs.add(abs(reduced.constant_term()))

    if len(origin_abs) > 1:
        raise InternalConsistencyError(
            f"pivot {pivot}: members disagree on |origin value|: {sorted(origin_abs)}"
        )

    # The parity lemma speaks about the unreduced families; the reduced ones
    # may differ by the content monomial's sign under flips.
    plus_polys = unreduced_sets[1]
    minus_polys = unreduced_sets[-1]
    identical = plus_polys == minus_polys
    predicted = (q - p) % 2 == 1
    if identical != predicted:
        raise InternalConsistencyError(
            f"pivot {pivot}: parity lemma predicts {'identical' if predicted else 'disjoint'} "
            f"families but construction says otherwise"
        )
    if not identical and (plus_polys & minus_polys):
        raise InternalConsistencyError(f"pivot {pivot}: families overlap without being equal")

    extremum = (OriginClass.LOCAL_MAX, OriginClass.LOCAL_MIN)
    plus_sigmas = {s for s, i in plus_set.items() if members[i].origin_class in extremum}
    minus_sigmas = {s for s, i in minus_set.items() if members[i].origin_class in extremum}

    return PsiFamily(
        pivot=(p, q),
        degree=n,
        support=support,
        free_slots=free,
        members=tuple(members),
        plus_set=plus_set,
        minus_set=minus_set,
        parity=ParityResult.IDENTICAL if identical else ParityResult.DISJOINT,
        sigma_sets_equal=plus_sigmas == minus_sigmas,
    )


def _apply_signs(poly: MultiPoly, flips: Mapping[str, int]) -> MultiPoly:
    idx = {name: poly.vars.index(name) for name in flips}
    out = {}
    for e, c in poly.terms.items():
        coef = c
        for name, s in flips.items():
            if s < 0 and e[idx[name]] % 2 == 1:
                coef = -coef
        out[e] = coef
    return MultiPoly(poly.vars, out)


def parity_check(family: PsiFamily) -> ParityResult:
    """Parity-lemma verdict, already constructively verified at build time."""
    return family.parity


def power_substitution_check(n: int, m: int) -> bool:
    """Verify Delta(P(x^m)) = (-1)^(nm(m-1)/2) m^(mn) (a0 a_n)^(m-1) Delta(P)^m.

    Symbolic, all coefficients free.  Stated (and checked) in the classical
    normalization, where the identity holds as printed.
    """
    if n * m > MAX_DEGREE:
        raise ValueError("n*m exceeds the supported degree range")
    if m < 1:
        raise ValueError("m >= 1 required")
    variables = tuple(f"a{j}" for j in range(n + 1))
    coeffs = {j: MultiPoly.var(variables, f"a{j}") for j in range(n + 1)}
    disc = discriminant_classical(coeffs, n, variables)
    comp = {j * m: MultiPoly.var(variables, f"a{j}") for j in range(n + 1)}
    lhs = discriminant_classical(comp, n * m, variables)
    a0an = MultiPoly.var(variables, "a0") * MultiPoly.var(variables, f"a{n}")
    rhs = (m ** (m * n)) * a0an ** (m - 1) * disc ** m
    if (n * m * (m - 1) // 2) % 2:
        rhs = -rhs
    return lhs == rhs
