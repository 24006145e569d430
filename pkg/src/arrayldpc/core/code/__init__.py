"""Array LDPC code construction and parity-check membership tests."""

from arrayldpc.core.code.alist import export_alist
from arrayldpc.core.code.array_code import (
    ParityCheckMatrix,
    build_code,
    column_entries,
    expand_parity_check,
    generator_basis,
    is_even_weight_code,
    is_stopping_set,
    syndrome_zero,
)

__all__ = [
    "ParityCheckMatrix",
    "build_code",
    "column_entries",
    "expand_parity_check",
    "export_alist",
    "generator_basis",
    "is_even_weight_code",
    "is_stopping_set",
    "syndrome_zero",
]
