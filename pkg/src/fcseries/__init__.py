"""fcseries: roots of algebraic equations by Fuss-Catalan series.

The library evaluates single- and multiparameter Fuss-Catalan numbers and
their generating functions, scales algebraic equations for a pivot pair of
coefficient slots, sums the resulting root series, and decides exactly where
those series converge absolutely via sign-substituted discriminant families.
"""

from .fc import (
    FCParams,
    MultiFCIndex,
    MultiFCParams,
    SeriesValue,
    compositions,
    fc_multi,
    fc_multi_binomial,
    fc_number,
    genfun_eval,
    genfun_multi_eval,
)
from .convergence import (
    BoxBound,
    SimplexBound,
    asymptotic_fc,
    measure_bounds,
    mellin_bound,
    necessary_box,
    ratio_limit,
    sufficient_simplex,
    trinomial_radius,
)

__version__ = "0.1.0"
