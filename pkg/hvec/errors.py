"""
Exception hierarchy for hvec.

Every error carries the process exit code the CLI maps it to.
"""


class HvecError(Exception):
    """Base class for all hvec errors."""

    exit_code = 2


class VoidComplexError(HvecError, ValueError):
    """Raised when an operation needs at least the empty face."""


class FaceNotInComplexError(HvecError, ValueError):
    """Raised when a face is not a member of the complex it is used with."""


class NotASubcomplexError(HvecError, ValueError):
    """Raised when a relative pair (Δ, Γ) has Γ not contained in Δ."""


class DimensionMismatchError(HvecError, ValueError):
    """Raised on shape, ambient dimension or modulus mismatches."""


class NotAnLsopError(HvecError, ValueError):
    """Raised when linear forms fail the facet-rank criterion."""


class ComplexParseError(HvecError, ValueError):
    """Raised when a complex file cannot be parsed.

    Attributes:
        path: Source file, if any.
        line: 1-based line number of the offending line, if known.
    """

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        location = ""
        if path is not None:
            location = f"{path}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}".strip() if location else message)


class ConfigError(HvecError, ValueError):
    """Raised when a YAML configuration cannot be loaded or validated."""


class UnknownTheoremError(HvecError, KeyError):
    """Raised for a theorem id with no registered handler."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown theorem"


class UnknownCatalogEntryError(HvecError, KeyError):
    """Raised for a catalog name that is not in the built-in catalog."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown catalog entry"


class GenericityError(HvecError, RuntimeError):
    """Raised when no linear system of parameters was found within the retry budget."""

    exit_code = 3


class SaturationError(HvecError, RuntimeError):
    """Raised when a saturation kernel chain does not stabilise."""

    exit_code = 3
