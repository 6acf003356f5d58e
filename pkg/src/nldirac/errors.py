"""Exception types shared across the toolkit."""


class NldiracError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameterError(NldiracError):
    """A physical or numerical parameter is out of its admissible range."""


class GridMismatchError(NldiracError):
    """Two objects that must share a grid were built on different grids."""


class ConfigError(NldiracError):
    """A run-configuration file could not be parsed.

    Carries the offending line number when one is known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SnapshotFormatError(NldiracError):
    """A snapshot file does not match the documented CSV layout."""


class UnsupportedModeError(NldiracError):
    """The requested coupling mode is outside an operation's domain."""


class NoSolutionFoundError(NldiracError):
    """Shooting failed to bracket or confirm a localized profile."""


class NumericalBlowupError(NldiracError):
    """Evolution produced non-finite amplitudes (instability / blow-up)."""

    def __init__(self, message, last_good_time, trajectory=None):
        super().__init__(message)
        self.last_good_time = last_good_time
        self.trajectory = trajectory


class InvalidDimensionError(NldiracError):
    """Space-time dimension outside the supported range n >= 2."""
