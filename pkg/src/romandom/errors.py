"""Exception types shared across the toolkit."""


class RomandomError(Exception):
    """Base class for all toolkit errors."""


class GraphError(RomandomError, ValueError):
    """Invalid graph construction or graph operation argument."""


class Graph6Error(RomandomError, ValueError):
    """Malformed graph6 text.

    ``line`` is set when the error was raised while reading a stream.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class LimitExceededError(RomandomError, ValueError):
    """Instance is larger than the documented exact-search limit."""


class OperationError(RomandomError, ValueError):
    """Labelled-tree operation applied at a vertex with the wrong status."""


class InvariantViolationError(RomandomError, RuntimeError):
    """A property that should hold by theorem failed at runtime.

    Raised instead of silently returning, so verification sweeps surface
    the violating instance as a check failure.
    """


class BondageCapError(InvariantViolationError):
    """Bondage search exhausted its cap without raising the invariant.

    The cap is derived from proven upper bounds, so exhausting it means
    either a solver bug or a genuine counterexample; both must be loud.
    """
