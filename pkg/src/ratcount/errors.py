"""Exception hierarchy shared by every enumeration in the package."""


class RatCountError(Exception):
    """Base class for all errors raised by :mod:`ratcount`."""


class DomainError(RatCountError, ValueError):
    """An argument lies outside the domain of the requested map."""


class InvariantError(RatCountError, ValueError):
    """A structured value (factorization, expansion, ...) is malformed."""


class NotInImage(RatCountError, ValueError):
    """A partial inverse was asked for a code that no input produces."""


class ResourceError(RatCountError, RuntimeError):
    """A configured table or brute-force cap would be exceeded."""


class NotFound(RatCountError, LookupError):
    """No scheme is registered under the requested id."""
