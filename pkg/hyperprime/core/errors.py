# hyperprime/core/errors.py
from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from hyperprime.schemas.axiom import AxiomReport


class HyperprimeError(ValueError):
    """Base class; a ValueError so plain `except ValueError` callers keep working."""


class ParseError(HyperprimeError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line is not None else message)


class StructureError(HyperprimeError):
    """A table or structure violates a representation invariant."""


class ArityMismatch(HyperprimeError):
    pass


class EmptySubset(HyperprimeError):
    pass


class OutOfCarrier(HyperprimeError):
    pass


class UnknownLabel(HyperprimeError):
    pass


class RingInvalid(HyperprimeError):
    pass


class NotProper(HyperprimeError):
    pass


class NotSub(HyperprimeError):
    pass


class PhiNotSub(HyperprimeError):
    pass


class ZeroElement(HyperprimeError):
    pass


class GeneratedNotIdeal(HyperprimeError):
    pass


class PremiseFails(HyperprimeError):
    pass


class NotMultiplication(HyperprimeError):
    pass


class NotHom(HyperprimeError):
    pass


class RingMismatch(HyperprimeError):
    pass


class CapExceeded(HyperprimeError):
    pass


class QuotientAxiomFailure(HyperprimeError):
    def __init__(self, message: str, report: "AxiomReport"):
        self.report = report
        super().__init__(message)


# Exit code 2 at the CLI; everything else that is a HyperprimeError maps to 1.
USAGE_ERRORS = (
    ParseError,
    UnknownLabel,
    NotProper,
    NotSub,
    PhiNotSub,
    EmptySubset,
    OutOfCarrier,
    ZeroElement,
    CapExceeded,
    RingMismatch,
    ArityMismatch,
    StructureError,
)
