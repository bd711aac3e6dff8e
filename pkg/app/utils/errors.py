"""
Exception hierarchy; the run workflow maps these onto exit codes
"""


class ObservabilityError(Exception):
    """Base class for every error raised by the decision engine"""


class InvalidInputError(ObservabilityError, ValueError):
    """Malformed symbol, equal slopes, unsupported degree, non-resonant pair and similar"""


class DegenerateGapError(InvalidInputError):
    """The weak uniform gap is undefined (degree-1 symbol with v = a1)"""


class WitnessNotFoundError(ObservabilityError, LookupError):
    """No alternative path or cycle of the requested shape exists"""


class ConsistencyError(ObservabilityError, RuntimeError):
    """An internal cross-check failed; results cannot be trusted"""
