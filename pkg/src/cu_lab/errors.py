"""Exception hierarchy."""


class CuLabError(Exception):
    pass


class UsageError(CuLabError, ValueError):
    """Bad input: wrong entry tag, malformed literal, unknown name."""


class ParseError(UsageError):
    pass


class EntryMismatch(UsageError):
    pass


class CapabilityError(CuLabError):
    """The operation is not supported by this carrier (e.g. a series kind)."""


class BetaUndefined(CuLabError, ValueError):
    """beta(x, y) requires x to lie in the order ideal generated by y."""


class CertificateError(CuLabError):
    """A certificate file is malformed (as opposed to failing verification)."""
