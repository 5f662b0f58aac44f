"""Exception types shared across the package."""

from __future__ import annotations


class ArtinGlueError(Exception):
    """Base class for all errors raised by this package."""


class NotAPoset(ArtinGlueError, ValueError):
    def __init__(self, law: str, witness: tuple[str, ...]):
        self.law = law
        self.witness = witness
        super().__init__(f"relation is not {law}: witness {witness}")


class NotALattice(ArtinGlueError, ValueError):
    def __init__(self, operation: str, witness: tuple[str, str]):
        self.operation = operation
        self.witness = witness
        super().__init__(f"no unique {operation} for pair {witness}")


class NotDistributive(ArtinGlueError, ValueError):
    def __init__(self, witness: tuple[str, str, str]):
        self.witness = witness
        x, y, z = witness
        super().__init__(f"{x} ^ ({y} v {z}) != ({x} ^ {y}) v ({x} ^ {z})")


class UnknownElement(ArtinGlueError, KeyError):
    def __init__(self, element: str, frame: str = ""):
        self.element = element
        self.frame = frame
        super().__init__(f"{element!r} is not an element of frame {frame!r}")

    def __str__(self) -> str:
        return self.args[0]


class DomainMismatch(ArtinGlueError, ValueError):
    pass


class NotMeetPreserving(ArtinGlueError, ValueError):
    """Raised when a map fails to preserve the top element or a binary meet.

    ``witness`` is either the string ``"top"`` or the offending pair ``(x, y)``.
    """

    def __init__(self, witness: str | tuple[str, str], detail: str):
        self.witness = witness
        super().__init__(detail)


class NoAdjoint(ArtinGlueError, ValueError):
    def __init__(self, witness: str, detail: str):
        self.witness = witness
        super().__init__(detail)


class NotNormalEpi(ArtinGlueError, ValueError):
    def __init__(self, witness: str, detail: str):
        self.witness = witness
        super().__init__(detail)


class NotLeq(ArtinGlueError, ValueError):
    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"maps are not pointwise ordered at {witness!r}")


class VerificationFailed(ArtinGlueError, AssertionError):
    """An identity that must hold for a well-formed input did not."""

    def __init__(self, equation: str, witness: object = None):
        self.equation = equation
        self.witness = witness
        super().__init__(f"{equation} fails at {witness!r}")


class CoherenceFailure(VerificationFailed):
    pass


class InputError(ArtinGlueError, ValueError):
    """Malformed input file; ``where`` names the file and field."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")
