"""Exception types raised by the tritest package."""


class TritestError(Exception):
    """Base class for all errors raised on purpose by tritest."""


class QueryContractError(TritestError, ValueError):
    """An oracle query broke its precondition (vertex range, index, distinct pair)."""


class GraphFormatError(TritestError, ValueError):
    """An edge-list file could not be parsed into a simple undirected graph."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InfeasibleParametersError(TritestError, ValueError):
    """Generator parameters violate one or more construction constraints."""

    def __init__(self, family: str, violations: list[str]):
        self.family = family
        self.violations = list(violations)
        super().__init__(f"infeasible {family} parameters: " + "; ".join(self.violations))


class UndefinedDensityError(TritestError, ValueError):
    """Edge density m/n is zero, so a density-scaled sample size is undefined."""


class ScaleError(TritestError, ValueError):
    """A brute-force oracle was asked to work beyond its size limit."""


class EmptySupportError(TritestError, ValueError):
    """There are no edges to sample at the requested threshold."""


class ConfigError(TritestError, ValueError):
    """A bench suite file is malformed."""
