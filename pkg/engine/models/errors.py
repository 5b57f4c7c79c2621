"""
Error Hierarchy
Domain errors raised by the lattice, Weyl, cone, classification and
decomposition services. The CLI error handler maps ``category`` to exit codes.
"""
from typing import Any, Dict, Optional


class RationalSurfaceError(Exception):
    """Base class for every rejection raised by the engine"""

    category = "domain"

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "category": self.category,
            **self.context,
        }


class DimensionMismatchError(RationalSurfaceError):
    """Two classes live on blow-ups with different n"""

    category = "validation"


class InvalidReflectionError(RationalSurfaceError):
    """Reflection along a class whose square is neither -1 nor -2"""

    category = "validation"


class NonIntegralClassError(RationalSurfaceError):
    category = "validation"


class NotAPositiveRootError(RationalSurfaceError):
    category = "validation"


class PreconditionError(RationalSurfaceError):
    """Input lies outside the hypothesis an operation is licensed for"""

    category = "domain"


class ADEContractViolation(RationalSurfaceError):
    """A zero-area simple-root diagram that is not of ADE shape"""

    category = "contract"


class PathContractViolation(RationalSurfaceError):
    """A deformation path left the chamber it must stay in"""

    category = "contract"


class RootClosureLimitExceeded(RationalSurfaceError):
    category = "contract"


class DecompositionError(RationalSurfaceError):
    """A solver certificate failed independent verification"""

    category = "contract"


class ClassParseError(RationalSurfaceError):
    """Malformed class literal; ``position`` is the 0-based offending column"""

    category = "usage"

    def __init__(self, message: str, text: str, position: int):
        super().__init__(message, {"position": position})
        self.text = text
        self.position = position

    def __str__(self) -> str:
        caret = " " * self.position + "^"
        return f"{self.message} at position {self.position}\n  {self.text}\n  {caret}"


class InvalidGeneratorError(RationalSurfaceError):
    """A Weyl word names a simple root that does not exist for the class's n"""

    category = "validation"


class UsageError(RationalSurfaceError):
    """A subcommand was invoked without the flags it needs"""

    category = "usage"
