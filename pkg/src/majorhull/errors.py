"""Exception hierarchy.

Verdict errors (the input is well formed but the requested object does not
exist) derive from :class:`InfeasibleInput`; the CLI maps those to exit
code 2 and everything else to exit code 1.
"""


class MajorhullError(ValueError):
    """Base class for all library errors."""


class InfeasibleInput(MajorhullError):
    """Well-formed input for which no decomposition/realization exists."""


class NotMajorizedError(InfeasibleInput):
    """``x`` is not majorized by ``y``."""


class OutsideHullError(InfeasibleInput):
    """Vector outside the hypersimplex, or matrix outside the projector hull."""


class InfeasibleError(InfeasibleInput):
    """Slice sums or degrees violate ``d * max <= sum``.

    ``lhs`` and ``rhs`` carry the two sides of the violated inequality.
    """

    def __init__(self, msg, lhs, rhs):
        super().__init__(msg)
        self.lhs = lhs
        self.rhs = rhs


class ConvergenceError(MajorhullError):
    """Jacobi sweeps did not converge within the sweep cap."""


class ReconstructionError(MajorhullError):
    """A convex combination does not reproduce its stated target."""
