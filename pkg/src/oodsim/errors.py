"""Exception types shared across the package."""


class OodsimError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(OodsimError):
    """A configuration value violates its documented constraints."""


class GeometryError(OodsimError):
    """A pipe-geometry input is degenerate, e.g. a bend tighter than the bore."""


class NonPositiveRatio(OodsimError):
    """A speed-demand ratio was zero or negative, which has no physical meaning."""


class EndOfNetwork(OodsimError):
    """Attempted to advance a traversal that already reached the end of the network."""


class IncompleteLog(OodsimError):
    """A metric required a finished traversal but the log never reached the end."""


class ZeroReference(OodsimError):
    """Absolute percentage error is undefined against a zero reference value."""


class MissingScenario(OodsimError):
    """A report was requested over runs that do not cover the required orientations."""
