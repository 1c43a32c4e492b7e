"""Complex powers with the branch cut along the positive real axis.

Every fractional power in this library goes through :func:`cpow`, which fixes
arg(w) in [0, 2pi).  Positive reals sit at arg = 0, so real-positive inputs
behave like ordinary real powers; approaching the cut from below yields
arg -> 2pi.  Consistency of this single choice is what makes the series
branches well defined.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

TWO_PI = 2.0 * math.pi


def carg(w: complex) -> float:
    """Argument of w mapped to [0, 2pi)."""
    theta = cmath.phase(complex(w))
    if theta < 0.0:
        theta += TWO_PI
    return theta


def cis(theta: float) -> complex:
    return complex(math.cos(theta), math.sin(theta))


def cpow(w: complex, alpha) -> complex:
    """w**alpha on the sheet arg(w) in [0, 2pi).

    Integer alpha uses the native power (exact for exactly representable
    inputs and independent of the cut, as it must be).
    """
    if isinstance(alpha, Fraction) and alpha.denominator == 1:
        alpha = int(alpha)
    if isinstance(alpha, float) and alpha.is_integer():
        alpha = int(alpha)
    w = complex(w)
    if isinstance(alpha, int):
        if w == 0 and alpha < 0:
            raise ZeroDivisionError("0 raised to a negative power")
        return w ** alpha
    a = float(alpha)
    if w == 0:
        if a > 0:
            return 0j
        raise ZeroDivisionError("0 raised to a non-positive fractional power")
    r = abs(w)
    return cmath.exp(a * (math.log(r) + 1j * carg(w)))
