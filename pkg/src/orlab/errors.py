"""Exception types shared across orlab modules."""


class OrlabError(Exception):
    """Base class for all orlab errors."""


class DomainError(OrlabError):
    """Input outside the domain an operation can handle."""


class NotConvex(OrlabError):
    """Secant-slope monotonicity failed where convexity is required."""


class NotNFunction(OrlabError):
    """Declared family does not satisfy the N-function limits."""


class RangeError(OrlabError):
    """A supremum diverged inside the requested range."""


class InconsistentCriteria(OrlabError):
    """Two equivalent numerical criteria disagreed beyond tolerance."""


class NonFinite(OrlabError):
    """A quantity that must be finite evaluated to infinity."""


class ConjugateUnavailable(OrlabError):
    """The complementary growth function could not be constructed."""


class SpecMismatch(OrlabError):
    """Two grid functions do not share the same grid."""


class MethodMismatch(OrlabError):
    """Requested method is incompatible with the input's decay class."""


class ComplexInput(OrlabError):
    """Operation requires real-valued input."""


class NotLocalized(OrlabError):
    """Stopping-interval precondition (hull average below threshold) failed."""


class SearchOverflow(OrlabError):
    """Log-domain parameter search exceeded its cap."""


class CorpusError(OrlabError):
    """Function unsupported by the requested verification (decay class)."""


class CoverageTooLow(OrlabError):
    """Too much of a disk circle maps outside the stored half-plane panel."""


class GateFailed(OrlabError):
    """A structural precondition on the growth function is not met."""


class ScenarioError(OrlabError):
    """Scenario file failed to parse or validate."""
