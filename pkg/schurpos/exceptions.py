from typing import Any, ClassVar, Dict, Optional


class SchurPosError(Exception):
    """Base exception class for all the library errors.

    Parameters:
        msg (`str`): A one-line description of what went wrong.
        code (`int`, optional): HTTP status used when the error crosses the web surface.
    """

    exit_code: ClassVar[int] = 2
    """Exit status used by the command-line interface."""
    default_code: ClassVar[int] = 400

    def __init__(self, msg: str, code: Optional[int] = None) -> None:
        super().__init__(msg)
        self.msg = msg
        self.code = code or self.default_code

    def to_dict(self) -> Dict[str, Any]:
        """Convert the exception to a dictionary."""
        return {
            "status": self.code,
            "message": self.msg,
        }


class DimensionError(SchurPosError):
    """Raised when matrix shapes do not fit the operation (non-square, mismatched)."""


class DomainError(SchurPosError):
    """Raised when an argument lies outside the domain of an operation."""


class SingularMatrixError(DomainError):
    """Raised when a determinant that must be a divisor vanishes."""


class NotSymmetricError(DomainError):
    """Raised when an explicit monomial expansion is not symmetric."""


class ParseError(SchurPosError):
    """Raised when a textual expression cannot be parsed.

    Parameters:
        msg (`str`): What the parser expected.
        position (`int`, optional): 0-based offset in the input where parsing failed.
    """

    exit_code: ClassVar[int] = 1
    default_code: ClassVar[int] = 422

    def __init__(self, msg: str, position: Optional[int] = None, code: Optional[int] = None) -> None:
        if position is not None:
            msg = f"{msg} (at position {position})"
        super().__init__(msg, code)
        self.position = position

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data["position"] = self.position
        return data


class ValidationError(ParseError):
    """Raised when bracket contents are not a partition."""


class DegreeMismatchError(ParseError):
    """Raised when an expression mixes degrees or basis letters."""
