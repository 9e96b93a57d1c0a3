"""Exception hierarchy.

Axiom failures are never raised: checkers return a :class:`~ddf.report.Report`.
Exceptions are reserved for calls whose preconditions do not hold.
"""


class DDFError(Exception):
    pass


class CompositionMismatch(DDFError, ValueError):
    pass


class InvalidObject(DDFError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class NotAFibration(DDFError, ValueError):
    pass


class BaseMismatch(DDFError, ValueError):
    pass


class FrameMismatch(DDFError, ValueError):
    pass


class NotOverBase(DDFError, ValueError):
    pass


class NotADDF(DDFError, ValueError):
    pass


class InvalidInput(DDFError, ValueError):
    """An input failed its validator; ``report`` holds the diagnostics."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class InvalidFunctor(InvalidInput):
    pass


class InvalidTransformation(InvalidInput):
    pass


class InvalidModule(InvalidInput):
    pass


class InvalidMultimodulation(InvalidInput):
    pass


class InvalidProfunctor(InvalidInput):
    pass


class InvalidMulticell(InvalidInput):
    pass


class ParseError(DDFError, ValueError):
    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
        self.message = message


class UnresolvedName(ParseError):
    def __init__(self, location: str, kind: str, name: str):
        super().__init__(location, f"unresolved {kind} name {name!r}")
        self.kind = kind
        self.name = name
