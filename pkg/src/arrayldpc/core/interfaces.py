"""Core interfaces, base classes and exceptions for arrayldpc components."""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Optional, Protocol

if TYPE_CHECKING:
    from arrayldpc.models.code import ArrayCode
    from arrayldpc.models.result import DistanceResult, VerificationReport
    from arrayldpc.models.template import TemplateSupportMatrix


class DistanceSearcher(Protocol):
    """Protocol for minimum/stopping distance searches."""

    def search(self, code: "ArrayCode") -> "DistanceResult":
        """Search the code for its smallest codeword or stopping set.

        Args:
            code: Array code to analyze

        Returns:
            Distance result with a re-validated witness (when one exists)
        """
        ...


class TemplateVerifier(Protocol):
    """Protocol for template support matrix verification."""

    def verify(self, template: "TemplateSupportMatrix") -> "VerificationReport":
        """Verify a complete template over a prime sweep.

        Args:
            template: Complete template support matrix

        Returns:
            Verification report with q0 and per-prime findings
        """
        ...


# Abstract base classes for common functionality


class BaseComponent(ABC):
    """Base class for arrayldpc components."""

    def __init__(self, config: Optional[dict[str, Any]] = None):
        """Initialize component with configuration."""
        self.config = config or {}

    @abstractmethod
    def initialize(self) -> None:
        """Initialize the component (precompute tables, pools, etc.)."""
        pass

    @abstractmethod
    def cleanup(self) -> None:
        """Cleanup resources (worker pools, caches, etc.)."""
        pass


class BaseAnalyzer(BaseComponent):
    """Base class for analyzers that need explicit initialization."""

    def __init__(self, config: Optional[dict[str, Any]] = None):
        super().__init__(config)
        self.is_initialized = False

    def ensure_initialized(self) -> None:
        """Ensure the analyzer is initialized."""
        if not self.is_initialized:
            self.initialize()
            self.is_initialized = True

    def __enter__(self) -> "BaseAnalyzer":
        """Context manager entry."""
        self.ensure_initialized()
        return self

    def __exit__(self, exc_type: Any, exc_val: Any, exc_tb: Any) -> None:
        """Context manager exit."""
        self.cleanup()


# Exception classes


class ArrayLDPCError(Exception):
    """Base exception for arrayldpc."""

    pass


class InvalidParameterError(ArrayLDPCError, ValueError):
    """Raised when code parameters, moduli or indices are invalid."""

    pass


class UndefinedInputError(ArrayLDPCError, ValueError):
    """Raised when an arithmetic operation has no defined result."""

    pass


class NonInvertibleError(ArrayLDPCError, ArithmeticError):
    """Raised when a residue has no modular inverse."""

    pass


class EvaluationUndefinedError(ArrayLDPCError, ArithmeticError):
    """Raised when a rational cannot be evaluated modulo a prime."""

    pass


class MemoryGuardError(ArrayLDPCError):
    """Raised when a dense expansion would exceed the configured cap."""

    pass


class EnumerationLimitError(ArrayLDPCError):
    """Raised when exhaustive enumeration is refused for a large dimension."""

    pass


class PreconditionError(ArrayLDPCError):
    """Raised when an operation precondition does not hold."""

    pass


class NotAValidColumnError(ArrayLDPCError):
    """Raised when a residue vector is not an arithmetic progression."""

    pass


class GraphError(ArrayLDPCError):
    """Base exception for support-graph operations."""

    pass


class MissingEdgeError(GraphError):
    """Raised when a designated edge is not present in a graph."""

    pass


class CycleOverflowError(GraphError):
    """Raised when cycle enumeration exceeds the per-edge cap."""

    pass


class StructureMismatchError(ArrayLDPCError):
    """Raised when two support matrices cannot be compared or matched."""

    pass


class InferenceError(ArrayLDPCError):
    """Base exception for template inference."""

    pass


class InferenceInconsistentError(InferenceError):
    """Raised when a template column would be set to two different values."""

    def __init__(self, column: int, message: str):
        super().__init__(f"column {column}: {message}")
        self.column = column


class AmbiguousMatchError(InferenceError):
    """Raised when a cycle step is realized by more than one column."""

    pass


class IncompleteTemplateError(InferenceError):
    """Raised when cycle pairs are exhausted before every column is filled."""

    def __init__(self, erased: list[int]):
        super().__init__(f"template incomplete, erased columns: {erased}")
        self.erased = erased


class InferenceBudgetError(InferenceError):
    """Raised when backtracking exceeds the configured budget."""

    pass


class VerificationError(ArrayLDPCError):
    """Raised when verification cannot be carried out."""

    pass


class DegenerateTemplateError(VerificationError):
    """Raised when two template columns are identical as rationals."""

    pass


class ConfigurationError(ArrayLDPCError):
    """Raised when configuration is invalid."""

    pass


class DataFormatError(ArrayLDPCError):
    """Raised when an input file (JSON, index list, alist) is malformed."""

    pass
