"""Fuss-Catalan numbers, their multiparameter extension, and generating functions.

Definitions
-----------
For exponent mu and power r, the degree-t coefficient is

    A_0 = 1,   A_t(mu, r) = (r / t!) * prod_{j=1}^{t-1} (t*mu + r - j).

With a vector of exponents mu = (mu_1, ..., mu_k) and a multi-index
t = (t_1, ..., t_k) of level |t| = t_1 + ... + t_k,

    A_t(mu, r) = (r / (t_1! ... t_k!)) * prod_{j=1}^{|t|-1} (t.mu + r - j)
               = multinomial(|t|; t) * A_{|t|}(that.mu, r),   that = t/|t|.

The generating function B(mu; r; z) = sum A_t(mu, r) z^t satisfies
f = 1 + sum_j z_j f^(mu_j) at r = 1 and the power law B(1)^r = B(r).

Evaluation
----------
Coefficients are always defined by the running product above; the product is
exact in rational mode (Fraction inputs).  Series are summed in a fixed
deterministic order: ascending level, compositions within a level in
lexicographic order, with compensated accumulation.  A vectorized path
(log-gamma magnitudes, exact zero detection) takes over for large
truncations, where the O(T^2) running products would be prohibitive; the two
paths are cross-checked in the test suite.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np
from scipy.special import gammaln, gammasgn

from . import convergence
from .branchcut import carg
from .errors import DegenerateExponentError

__all__ = [
    "FCParams",
    "MultiFCParams",
    "MultiFCIndex",
    "SeriesValue",
    "fc_number",
    "fc_multi",
    "fc_multi_binomial",
    "compositions",
    "genfun_eval",
    "genfun_multi_eval",
]

# Truncation at which genfun_eval switches from the running-product reference
# path to the vectorized log-gamma path.  Fixed, so identical inputs always
# take the same path.
_FAST_PATH_T = 512

_EXACT_TYPES = (int, Fraction)


def _is_exact(*values) -> bool:
    return all(isinstance(v, _EXACT_TYPES) for v in values)


# ---------------------------------------------------------------------------
# parameter bundles


@dataclass(frozen=True)
class FCParams:
    """Exponent/power pair (mu, r).  Real only; complex parameters are out of scope."""

    mu: float
    r: float

    def __post_init__(self):
        for name in ("mu", "r"):
            v = getattr(self, name)
            if not math.isfinite(float(v)):
                raise ValueError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class MultiFCParams:
    """Exponent vector and power (mu_1..mu_k, r); exponents need not be distinct."""

    mu: tuple
    r: float

    def __post_init__(self):
        if len(self.mu) == 0:
            raise ValueError("mu must be nonempty")
        for v in (*self.mu, self.r):
            if not math.isfinite(float(v)):
                raise ValueError(f"parameters must be finite, got {v!r}")


@dataclass(frozen=True)
class MultiFCIndex:
    """Multi-index t = (t_1, ..., t_k) of nonnegative integers."""

    t: tuple

    def __post_init__(self):
        if any((not isinstance(ti, int)) or ti < 0 for ti in self.t):
            raise ValueError("index components must be nonnegative integers")

    @property
    def level(self) -> int:
        return sum(self.t)

    @property
    def unit(self) -> tuple:
        """t / |t| as exact fractions; defined only for |t| > 0."""
        n = self.level
        if n == 0:
            raise ValueError("unit vector undefined at the zero index")
        return tuple(Fraction(ti, n) for ti in self.t)


@dataclass(frozen=True)
class SeriesValue:
    """Partial sum of a series with its truncation level and a tail estimate."""

    value: complex
    truncation_level: int
    tail_estimate: float


# ---------------------------------------------------------------------------
# coefficients


def fc_number(mu, r, t: int):
    """Degree-t Fuss-Catalan number A_t(mu, r).

    Exact (Fraction) when mu and r are ints or Fractions; float/complex
    otherwise.  Always the running product, never a ratio of Gamma values.
    """
    if t < 0:
        raise ValueError("t must be a nonnegative integer")
    if t == 0:
        return Fraction(1) if _is_exact(mu, r) else 1.0
    if _is_exact(mu, r):
        acc = Fraction(r)
        w = t * Fraction(mu) + r
        for j in range(1, t):
            acc *= w - j
        return acc / math.factorial(t)
    # Balanced division keeps intermediate magnitudes near the result size.
    acc = r * (1.0 + 0.0j) if isinstance(mu, complex) or isinstance(r, complex) else float(r)
    w = t * mu + r
    for j in range(1, t):
        acc = acc * (w - j) / (j + 1)
    return acc


def fc_multi(mu: Sequence, r, t: Sequence[int]):
    """Multiparameter Fuss-Catalan number for multi-index t (direct product form)."""
    if len(t) != len(mu):
        raise ValueError(f"dimension mismatch: {len(t)} indices vs {len(mu)} exponents")
    if any((not isinstance(ti, int)) or ti < 0 for ti in t):
        raise ValueError("index components must be nonnegative integers")
    level = sum(t)
    exact = _is_exact(r, *mu)
    if level == 0:
        return Fraction(1) if exact else 1.0
    if exact:
        acc = Fraction(r)
        w = sum(Fraction(m) * ti for m, ti in zip(mu, t)) + r
        for j in range(1, level):
            acc *= w - j
        denom = 1
        for ti in t:
            denom *= math.factorial(ti)
        return acc / denom
    acc = float(r)
    w = sum(float(m) * ti for m, ti in zip(mu, t)) + float(r)
    for j in range(1, level):
        acc *= w - j
    for ti in t:
        acc /= math.factorial(ti)
    return acc


def fc_multi_binomial(mu: Sequence, r, t: Sequence[int]):
    """Same number via the collapsed form multinomial(|t|; t) * A_|t|(that.mu, r)."""
    if len(t) != len(mu):
        raise ValueError(f"dimension mismatch: {len(t)} indices vs {len(mu)} exponents")
    level = sum(t)
    exact = _is_exact(r, *mu)
    if level == 0:
        return Fraction(1) if exact else 1.0
    coef = math.factorial(level)
    for ti in t:
        coef //= math.factorial(ti)
    if exact:
        mu_hat = sum(Fraction(m) * ti for m, ti in zip(mu, t)) / level
        return coef * fc_number(mu_hat, Fraction(r), level)
    mu_hat = sum(float(m) * ti for m, ti in zip(mu, t)) / level
    return coef * fc_number(mu_hat, float(r), level)


def compositions(t: int, k: int) -> Iterator[tuple]:
    """All k-tuples of nonnegative integers summing to t, lexicographically."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if k == 1:
        yield (t,)
        return
    for head in range(t + 1):
        for rest in compositions(t - head, k - 1):
            yield (head,) + rest


# ---------------------------------------------------------------------------
# vectorized coefficient magnitudes
#
# P_t(w) = prod_{j=1}^{t-1} (w - j) in log magnitude + sign, with zeros
# (integer w in 1..t-1) detected exactly.  Valid elementwise for arrays.


def _integrality(w: np.ndarray, t_num=None, t_den=None, t_arr=None, r_frac=None, mu_frac=None):
    """(is_integer mask, rounded integer values) for w = t*mu + r.

    When mu and r are Fractions the test is exact modular arithmetic on the
    level array; otherwise a relative tolerance of 1e-9 is used (a genuinely
    non-integer w that close to an integer would contribute a term ~1e-9 of
    its neighbors, negligible at the tolerances this path serves).
    """
    if mu_frac is not None and r_frac is not None and t_arr is not None:
        a, b = mu_frac.numerator, mu_frac.denominator
        c, d = r_frac.numerator, r_frac.denominator
        num = t_arr.astype(np.int64) * (a * d) + c * b
        den = b * d
        mask = num % den == 0
        vals = np.where(mask, num // den, 0).astype(np.int64)
        return mask, vals
    wr = np.rint(w)
    mask = np.abs(w - wr) <= 1e-9 * np.maximum(1.0, np.abs(w))
    return mask, wr.astype(np.int64)


def _falling_ln(w: np.ndarray, t, wint_mask: np.ndarray, wint: np.ndarray):
    """log|P_t(w)|, sign(P_t(w)), and the exact-zero mask, elementwise.

    ``t`` may be a scalar or an array broadcastable with ``w``.
    """
    t = np.asarray(t)
    lnmag = np.zeros(np.broadcast(w, t).shape)
    sign = np.ones_like(lnmag)
    zero = np.zeros_like(lnmag, dtype=bool)

    trivial = t <= 1  # empty product
    zero |= wint_mask & (wint >= 1) & (wint <= t - 1)

    nonint = ~wint_mask & ~trivial
    if np.any(nonint):
        ww = np.where(nonint, w, 2.5)
        tt = np.where(nonint, t, 2)
        lo = ww - tt + 1
        lnmag = np.where(nonint, gammaln(ww) - gammaln(lo), lnmag)
        sign = np.where(nonint, gammasgn(ww) * gammasgn(lo), sign)

    up = wint_mask & (wint >= np.maximum(t, 2)) & ~trivial
    if np.any(up):
        ww = np.where(up, w, 5.0)
        tt = np.where(up, t, 2)
        lnmag = np.where(up, gammaln(ww) - gammaln(ww - tt + 1), lnmag)

    neg = wint_mask & (wint <= 0) & ~trivial
    if np.any(neg):
        ww = np.where(neg, w, 0.0)
        tt = np.where(neg, t, 2)
        lnmag = np.where(neg, gammaln(tt - ww) - gammaln(1.0 - ww), lnmag)
        sign = np.where(neg & (t % 2 == 0), -sign, sign)  # (-1)^(t-1)

    return lnmag, sign, zero


def _fc_coeff_arrays(mu, r, T: int):
    """(lnmag, sign, zero) of A_t(mu, r) for t = 0..T (float semantics)."""
    t_arr = np.arange(T + 1, dtype=np.int64)
    muf, rf = float(mu), float(r)
    w = muf * t_arr + rf
    if isinstance(mu, _EXACT_TYPES) and isinstance(r, _EXACT_TYPES):
        wint_mask, wint = _integrality(w, t_arr=t_arr, mu_frac=Fraction(mu), r_frac=Fraction(r))
    else:
        wint_mask, wint = _integrality(w)
    lnP, sgnP, zero = _falling_ln(w, t_arr, wint_mask, wint)
    if rf == 0.0:
        lnmag = np.full(T + 1, -np.inf)
        sign = np.ones(T + 1)
        zero = np.ones(T + 1, dtype=bool)
    else:
        lnmag = math.log(abs(rf)) + lnP - gammaln(t_arr + 1.0)
        sign = math.copysign(1.0, rf) * sgnP
    # t = 0 is A_0 = 1 by definition; t = 1 is A_1 = r.
    lnmag[0], sign[0], zero[0] = 0.0, 1.0, False
    if T >= 1:
        zero[1] = rf == 0.0
    return lnmag, sign, zero


# ---------------------------------------------------------------------------
# generating functions


def _kahan_complex(terms) -> complex:
    s = 0j
    c = 0j
    for x in terms:
        y = x - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s


def _tail_geometric(last_mag: float, x: float) -> float:
    if x >= 1.0:
        return math.inf
    return last_mag * x / (1.0 - x)


def genfun_eval(mu, r, z: complex, T: int) -> SeriesValue:
    """Partial sum of B(mu; r; z) through degree T, with a tail estimate.

    Summation is ascending in t with compensated accumulation.  The tail
    estimate is the geometric bound from the asymptotic coefficient ratio,
    trusted only after a ten-term burn-in; outside the exact convergence
    radius (single exponent: an iff) the tail is set to +inf and a
    RuntimeWarning is emitted.
    """
    if T < 0:
        raise ValueError("T >= 0 required")
    z = complex(z)
    if z == 0:
        one = 1.0 + 0.0j
        return SeriesValue(one, T, 0.0)

    if T <= _FAST_PATH_T:
        acc = []
        zp = 1.0 + 0.0j
        last_mags = []
        for t in range(T + 1):
            a = fc_number(mu, r, t)
            term = complex(a) * zp
            acc.append(term)
            last_mags.append(abs(term))
            zp *= z
        value = _kahan_complex(acc)
        last_mag = max(last_mags[-6:]) if last_mags else 0.0
    else:
        lnmag, sign, zero = _fc_coeff_arrays(mu, r, T)
        t_arr = np.arange(T + 1)
        with np.errstate(over="ignore", invalid="ignore"):
            lnterm = lnmag + t_arr * math.log(abs(z))
            mag = np.exp(lnterm)
        mag[zero] = 0.0
        theta = carg(z) * t_arr
        re = mag * sign * np.cos(theta)
        im = mag * sign * np.sin(theta)
        value = complex(math.fsum(re), math.fsum(im))
        last_mag = float(np.max(mag[-6:]))

    try:
        rho = convergence.ratio_limit(mu)
    except DegenerateExponentError:
        # mu in {0, 1}: no ratio-test bound; fall back to the observed decay.
        tail = math.inf if last_mag > abs(value) * 1e-3 else last_mag
        return SeriesValue(value, T, tail)

    x = abs(z) * rho
    if x > 1.0 + 1e-12:
        warnings.warn(
            f"|z| = {abs(z)} exceeds the convergence radius {1.0 / rho}; series diverges",
            RuntimeWarning,
            stacklevel=2,
        )
        return SeriesValue(value, T, math.inf)
    if T < 10:
        return SeriesValue(value, T, math.inf)
    return SeriesValue(value, T, _tail_geometric(last_mag, min(x, 1.0 - 1e-16)))


def _composition_array(t: int, k: int) -> np.ndarray:
    """Compositions of t into k parts as an array, lexicographic row order."""
    if k == 1:
        return np.array([[t]], dtype=np.int64)
    if k == 2:
        t1 = np.arange(t + 1, dtype=np.int64)
        return np.stack([t1, t - t1], axis=1)
    rows = list(compositions(t, k))
    return np.array(rows, dtype=np.int64)


class _LevelData:
    """Per-level sums of a multiparameter series at one branch point."""

    def __init__(self, values, ln_abs_sums):
        self.values = values          # complex level sums, index = level
        self.ln_abs_sums = ln_abs_sums  # log of sum of |terms| per level


def _series_levels(mu_vec, r, z_vec, T: int) -> _LevelData:
    """Level sums of sum_t A_t(mu, r) z^t for levels 0..T, vectorized per level.

    Magnitudes are handled in log space, so divergent inputs report honest
    level magnitudes instead of overflowing.
    """
    k = len(mu_vec)
    mu_f = np.array([float(m) for m in mu_vec])
    r_f = float(r)
    exact = _is_exact(r, *mu_vec)
    if exact:
        mu_fr = [Fraction(m) for m in mu_vec]
        r_fr = Fraction(r)
        den_l = math.lcm(r_fr.denominator, *[m.denominator for m in mu_fr])
        mu_num = np.array([int(m * den_l) for m in mu_fr], dtype=np.int64)
        r_num = int(r_fr * den_l)

    zs = [complex(v) for v in z_vec]
    ln_z = np.array([math.log(abs(v)) if v != 0 else -math.inf for v in zs])
    arg_z = np.array([carg(v) if v != 0 else 0.0 for v in zs])

    values = [1.0 + 0.0j]
    ln_abs = [0.0]
    ln_r = math.log(abs(r_f)) if r_f != 0.0 else -math.inf
    sgn_r = math.copysign(1.0, r_f)
    for t in range(1, T + 1):
        comp = _composition_array(t, k)
        w = comp @ mu_f + r_f
        if exact:
            num = comp @ mu_num + r_num
            wint_mask = num % den_l == 0
            wint = np.where(wint_mask, num // den_l, 0)
        else:
            wint_mask, wint = _integrality(w)
        lnP, sgnP, zero = _falling_ln(w, t, wint_mask, wint)
        ln_fact = np.sum(gammaln(comp + 1.0), axis=1)
        with np.errstate(invalid="ignore"):
            lnz_contrib = np.where(comp > 0, comp * ln_z, 0.0).sum(axis=1)
        lnterm = ln_r + lnP - ln_fact + lnz_contrib
        lnterm = np.where(zero, -np.inf, lnterm)
        sign = sgn_r * sgnP
        theta = comp @ arg_z

        finite = lnterm > -np.inf
        if not np.any(finite):
            values.append(0j)
            ln_abs.append(-math.inf)
            continue
        m = float(np.max(lnterm[finite]))
        scaled = np.where(finite, np.exp(lnterm - m), 0.0)
        re = float(np.sum(scaled * sign * np.cos(theta)))
        im = float(np.sum(scaled * sign * np.sin(theta)))
        ln_level_abs = m + math.log(float(np.sum(scaled)))
        if m > 700.0:
            values.append(complex(math.inf, math.inf))
        else:
            values.append(complex(re, im) * math.exp(m))
        ln_abs.append(ln_level_abs)
    return _LevelData(values, ln_abs)


def _multi_tail(mu_vec, z_vec, ln_abs, T: int) -> float:
    """Tail estimate for a level-summed multiparameter series."""
    alpha = sum(abs(complex(v)) for v in z_vec)
    if alpha == 0.0:
        return 0.0
    if T < 10:
        return math.inf
    # coefficient patterns can contain exact zeros (integer t*mu + r), so the
    # tail scale comes from the largest of the trailing levels, not the last
    tail_ln = max(ln_abs[-6:])
    if tail_ln > 700.0:
        return math.inf
    last = math.exp(tail_ln) if tail_ln > -math.inf else 0.0
    try:
        rho = convergence.ratio_limit(convergence.sufficient_simplex([float(m) for m in mu_vec]).mu_star)
    except DegenerateExponentError:
        rho = math.inf
    x = alpha * rho
    if x < 1.0:
        return _tail_geometric(last, x)
    # Outside the guaranteed simplex the series may still converge; estimate
    # the decay empirically from the trailing level magnitudes.
    window = [v for v in ln_abs[-8:] if v > -math.inf]
    if len(window) < 4:
        return 0.0 if last == 0.0 else math.inf
    ratio = math.exp((window[-1] - window[0]) / (len(window) - 1))
    if ratio >= 0.999:
        return math.inf
    return _tail_geometric(last, ratio)


def genfun_multi_eval(mu_vec: Sequence, r, z_vec: Sequence[complex], T: int) -> SeriesValue:
    """Partial sum of the multiparameter generating function through level T.

    Levels are summed ascending; compositions within a level are enumerated
    lexicographically, so the result is reproducible bit-for-bit.
    """
    if len(z_vec) != len(mu_vec):
        raise ValueError(f"dimension mismatch: {len(z_vec)} points vs {len(mu_vec)} exponents")
    if T < 0:
        raise ValueError("T >= 0 required")
    if len(mu_vec) == 0 or all(complex(v) == 0 for v in z_vec):
        return SeriesValue(1.0 + 0.0j, T, 0.0)
    levels = _series_levels(mu_vec, r, z_vec, T)
    value = _kahan_complex(levels.values)
    tail = _multi_tail(mu_vec, z_vec, levels.ln_abs_sums, T)
    return SeriesValue(value, T, tail)
