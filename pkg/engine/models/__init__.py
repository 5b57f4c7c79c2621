"""
Domain Models Module
Centralized import for lattice classes, Weyl words and errors
"""

from .lattice import (
    HomologyClass,
    DistinguishedClasses,
    pairing,
    reflect,
    distinguished,
    canonical_class,
    simple_root,
    simple_root_indices,
    stabilize,
    truncate,
    format_rational,
)

from .weyl_word import (
    WeylWord,
    SimpleRoot,
    ENReflection,
    ReductionStatus,
)

from .errors import (
    RationalSurfaceError,
    DimensionMismatchError,
    InvalidReflectionError,
    NonIntegralClassError,
    NotAPositiveRootError,
    PreconditionError,
    ADEContractViolation,
    PathContractViolation,
    RootClosureLimitExceeded,
    DecompositionError,
    ClassParseError,
    InvalidGeneratorError,
    UsageError,
)

# Export everything for easy imports
__all__ = [
    # Lattice
    "HomologyClass",
    "DistinguishedClasses",
    "pairing",
    "reflect",
    "distinguished",
    "canonical_class",
    "simple_root",
    "simple_root_indices",
    "stabilize",
    "truncate",
    "format_rational",
    # Words
    "WeylWord",
    "SimpleRoot",
    "ENReflection",
    "ReductionStatus",
    # Errors
    "RationalSurfaceError",
    "DimensionMismatchError",
    "InvalidReflectionError",
    "NonIntegralClassError",
    "NotAPositiveRootError",
    "PreconditionError",
    "ADEContractViolation",
    "PathContractViolation",
    "RootClosureLimitExceeded",
    "DecompositionError",
    "ClassParseError",
    "InvalidGeneratorError",
    "UsageError",
]
