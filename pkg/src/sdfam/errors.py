"""Exception types shared across the package.

Two broad families matter for callers (and for the CLI exit codes):

* ``InvalidParameterError`` and its subclasses mean the *input* was bad:
  malformed tables, unparseable files, out-of-range arguments.
* ``CheckFailure`` and its subclasses mean the input was well-formed but a
  mathematical check said no: a verification condition failed or a
  construction's hypotheses do not hold.  These always carry a condition
  name and a concrete witness for diagnosis.
"""

from __future__ import annotations

from typing import Any, Optional


class SdfamError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(SdfamError, ValueError):
    """Malformed or out-of-range input."""


class GroupAxiomError(InvalidParameterError):
    """A Cayley table violates a group axiom."""

    def __init__(self, axiom: str, witness: Any, message: Optional[str] = None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"group axiom {axiom!r} fails, witness {witness!r}")


class HomomorphismError(InvalidParameterError):
    """A map table is not additive: carries the witness pair (x, y)."""

    def __init__(self, witness: tuple, message: Optional[str] = None):
        self.witness = witness
        super().__init__(message or f"not a homomorphism, witness pair {witness!r}")


class IrreducibilityError(InvalidParameterError):
    """A proposed field modulus has a proper factor."""

    def __init__(self, factor: tuple, cofactor: tuple, message: Optional[str] = None):
        self.factor = factor
        self.cofactor = cofactor
        super().__init__(message or f"modulus is reducible, factor {factor!r}")


class SpecFormatError(InvalidParameterError):
    """A JSON or text input file does not match the expected schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class CheckFailure(SdfamError):
    """A mathematical check failed; names the condition and gives a witness."""

    def __init__(self, condition: str, witness: Optional[dict] = None, message: Optional[str] = None):
        self.condition = condition
        self.witness = witness or {}
        text = message or f"condition {condition!r} fails"
        if witness:
            text += f", witness {witness!r}"
        super().__init__(text)


class SdfCheckError(CheckFailure):
    """A labeled family is not a short difference family."""


class DesignCheckError(CheckFailure):
    """A block collection is not a balanced incomplete block design."""


class HypothesisError(CheckFailure):
    """A constructor's hypotheses do not hold for the given input."""


class TheoremViolationError(CheckFailure):
    """Hypotheses passed but a promised conclusion failed.

    This means a bug in the library (or a wrong theorem), never a bad input;
    the test suite treats any occurrence as a build failure.
    """
