"""Exception types shared across the package."""

from .exactalg.laurent import InexactDivision  # noqa: F401  (re-exported)
from .exactalg.spoly import NotInSImage  # noqa: F401


class LbpsError(Exception):
    pass


class MismatchedGeometry(LbpsError, ValueError):
    """A curve class was used with a pair it does not belong to."""


class NonPositiveGamma(LbpsError, ValueError):
    pass


class NotInitial(LbpsError):
    """The class is not covered by the initial data (Gamma.beta >= 3)."""


class UnsupportedOracle(LbpsError):
    """The quiver oracle cannot certify this case (e.g. non-coprime dimension vector)."""


class UnsupportedClass(LbpsError, ValueError):
    pass


class NotCoprime(UnsupportedOracle):
    pass


class BudgetExceeded(UnsupportedOracle):
    pass


class ZeroVector(LbpsError, ValueError):
    pass


class NotSinkOrSource(LbpsError, ValueError):
    pass


class MissingSeed(LbpsError):
    pass


class NonzeroConstantTerm(LbpsError, ValueError):
    pass


class AsymmetricEulerRestriction(LbpsError):
    pass


class ZeroSeries(LbpsError):
    pass
