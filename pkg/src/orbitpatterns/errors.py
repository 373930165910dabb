"""Typed errors shared across the package."""


class BadToken(ValueError):
    """Pattern text contains a token that is not a positive integer."""


class NotABijection(ValueError):
    """Image list repeats or omits a value of {1..m}."""


class NotASingleCycle(ValueError):
    """Permutation is valid but splits into more than one cycle."""


class EvenPeriod(ValueError):
    """Operation is only defined for odd-period patterns."""


class NonPositive(ValueError):
    """Sharkovskii comparisons need integers >= 1."""


class EmptySet(ValueError):
    """generator_of needs a nonempty period set."""


class NoLoop(RuntimeError):
    """Digraph of an m-orbit (m > 2) has no loop: a theorem was violated."""


class NoOddCycle(RuntimeError):
    """No odd primitive cycle up to the period: a theorem was violated."""


class OutOfDomain(ValueError):
    """Evaluation point lies outside the map's interval."""


class FlatSegment(ValueError):
    """Map has a flat piece; the periodic-point oracle requires strict monotonicity."""


class PeriodBoundTooLarge(ValueError):
    """find_periods bound exceeds the default guard; pass allow_large=True."""


class ParamOutOfRange(ValueError):
    """Family parameters violate the documented ranges."""


class KTooLarge(ValueError):
    """Exhaustive enumeration is capped at k = 5 ((2k)! search space)."""
