"""Core components and interfaces for arrayldpc."""

from arrayldpc.core.interfaces import (
    ArrayLDPCError,
    BaseAnalyzer,
    BaseComponent,
    DistanceSearcher,
    TemplateVerifier,
)

__all__ = [
    "ArrayLDPCError",
    "BaseAnalyzer",
    "BaseComponent",
    "DistanceSearcher",
    "TemplateVerifier",
]
