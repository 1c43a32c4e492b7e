"""Exception types shared across the library."""


class DegenerateExponentError(ValueError):
    """Exponent mu in {0, 1}: the ratio-test limit |mu|^mu |1-mu|^(1-mu) has no use."""


class ZeroPivotError(ValueError):
    """A pivot slot carries a zero coefficient and cannot be scaled to 1."""


class BranchIndexError(IndexError):
    """Branch index ell outside 0..q-p-1."""


class OracleFailure(RuntimeError):
    """The simultaneous-iteration root finder did not reach the target residual."""


class NoConvergentCover(RuntimeError):
    """No pivot selection yields convergent series for all roots (a legitimate outcome).

    Attributes: results (converged branches found), uncovered (count of roots missed).
    """

    def __init__(self, message, results=None, uncovered=0):
        super().__init__(message)
        self.results = results or []
        self.uncovered = uncovered


class IndeterminateOrigin(RuntimeError):
    """Origin classification of a reduced discriminant was inconclusive; refusing to guess."""


class NoActiveBoundary(RuntimeError):
    """Every family member has a saddle at the origin; boundary needs manual analysis."""


class InternalConsistencyError(RuntimeError):
    """A structural prediction (e.g. the parity lemma) failed constructive verification."""
