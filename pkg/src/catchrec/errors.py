"""Exception types shared across the package."""


class CatchrecError(Exception):
    """Base class for all package-specific errors."""


class GraphUnavailable(CatchrecError):
    """Usage-graph extraction was requested for a unit that failed to parse."""


class StructureUnavailable(CatchrecError):
    """Structural scoring needs two parsed units; at least one failed to parse."""


class EmptyUnit(CatchrecError):
    """The operation needs a unit with at least one source line."""


class NoApiObjects(CatchrecError):
    """No trackable API objects were found in the unit."""


class UnknownException(CatchrecError):
    """No exception could be inferred; an explicit name is required."""


class EmptyPool(CatchrecError):
    """Ranking or normalization was called with an empty candidate pool."""


class ConfigError(CatchrecError):
    """A configuration file contains unknown or invalid entries."""


class CorpusError(CatchrecError):
    """Base for corpus construction failures."""


class AuthMissing(CorpusError):
    """No auth token is available for the remote search API."""


class RateLimited(CorpusError):
    """The remote search API kept rate-limiting after bounded retries."""


class NetworkFailure(CorpusError):
    """A remote request failed at the transport level."""
