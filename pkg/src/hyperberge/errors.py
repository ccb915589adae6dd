"""Exception hierarchy shared by all modules."""


class HypergraphError(Exception):
    """Base class for every error raised by hyperberge."""


class ParseError(HypergraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class InvalidHypergraph(HypergraphError):
    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class CanonLimitExceeded(HypergraphError):
    pass


class IndexOutOfRange(HypergraphError, IndexError):
    pass


class InvalidParams(HypergraphError, ValueError):
    pass


class UnsupportedRegime(HypergraphError, ValueError):
    pass


class EmptyHypergraph(HypergraphError):
    pass


class PreconditionViolated(HypergraphError):
    """The input contains a forbidden Berge cycle; ``cycle`` is its certificate."""

    def __init__(self, message: str, cycle=None):
        super().__init__(message)
        self.cycle = cycle


class MultiplicityExceeded(HypergraphError):
    pass


class TooFewVertices(HypergraphError):
    pass


class NotBipartite(HypergraphError):
    pass
