"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotExtendable(DomainError):
    """The descent map on SYT of a connected ribbon has no cyclic extension."""


class ParseError(DomainError):
    """A textual shape could not be parsed."""


class ResourceLimitError(RuntimeError):
    """A configured size or enumeration limit would be exceeded."""


class InternalError(AssertionError):
    """An internal consistency check failed; indicates a bug."""
