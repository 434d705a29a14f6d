"""Exception types shared by every module; the CLI maps them to exit codes."""


class SkewCodeError(Exception):
    pass


class ParseError(SkewCodeError, ValueError):
    """Malformed field, element or polynomial text (CLI exit status 2)."""


class AssumptionError(SkewCodeError, ValueError):
    """A standing hypothesis is violated, e.g. t does not divide n (exit status 3)."""


class BudgetError(SkewCodeError):
    """A field, extension, chain or enumeration size limit was exceeded (exit status 4)."""
