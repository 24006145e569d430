import pytest
from sympy import primerange

from arrayldpc.core.code import (
    build_code,
    column_entries,
    expand_parity_check,
    export_alist,
    generator_basis,
    is_even_weight_code,
    is_stopping_set,
    syndrome_zero,
)
from arrayldpc.core.interfaces import InvalidParameterError, MemoryGuardError
from arrayldpc.core.support import column_xy
from arrayldpc.models.code import ColumnXY


@pytest.mark.parametrize(
    "q,m,dimension",
    [(7, 4, 24), (7, 5, 18), (7, 6, 12), (7, 7, 6), (5, 3, 12)],
)
def test_dimension(q, m, dimension):
    code = build_code(q, m)
    assert code.length == q * q
    assert code.dimension == dimension


@pytest.mark.parametrize("q,m", [(4, 3), (9, 2), (2, 1), (7, 8), (7, 0)])
def test_build_code_rejects_bad_parameters(q, m):
    with pytest.raises(InvalidParameterError):
        build_code(q, m)


def test_column_entries():
    assert column_entries(ColumnXY(x=5, y=23), 47, 6) == (5, 28, 4, 27, 3, 26)
    assert column_entries(ColumnXY(x=3, y=0), 7, 4) == (3, 3, 3, 3)


def test_column_rows_follow_block_layout():
    code = build_code(5, 3)
    # column 7 is (x, y) = (2, 1)
    assert code.column(7) == ColumnXY(x=2, y=1)
    assert code.column_rows(7) == (2, 5 + 3, 10 + 4)


@pytest.mark.parametrize("q,m", [(5, 3), (7, 4), (7, 7)])
def test_expanded_rank(q, m):
    code = build_code(q, m)
    h = expand_parity_check(code)
    assert (h.n_rows, h.n_cols) == (q * m, q * q)
    assert h.rank == q * m - m + 1
    dense = h.to_dense()
    assert dense.shape == (q * m, q * q)
    assert (dense.sum(axis=0) == m).all()
    assert (dense.sum(axis=1) == q).all()


def test_expansion_memory_guard():
    with pytest.raises(MemoryGuardError):
        expand_parity_check(build_code(101, 3), max_columns=10_000)


def test_generator_basis_spans_code(code_7_6):
    basis = generator_basis(code_7_6)
    assert len(basis) == code_7_6.dimension
    h = expand_parity_check(code_7_6)
    for word in basis:
        assert all((row & word).bit_count() % 2 == 0 for row in h.rows)


def test_every_array_code_has_even_weight(code_5_3, code_7_6):
    assert is_even_weight_code(code_5_3)
    assert is_even_weight_code(code_7_6)


def test_syndrome_zero(code_7_6, q7_support):
    assert syndrome_zero(code_7_6, [])
    assert not syndrome_zero(code_7_6, [0])
    assert syndrome_zero(code_7_6, q7_support.indices())
    assert not syndrome_zero(code_7_6, q7_support.indices()[1:])


def test_syndrome_zero_rejects_out_of_range(code_5_3):
    with pytest.raises(InvalidParameterError):
        syndrome_zero(code_5_3, [25])


def test_is_stopping_set(code_7_6, q7_support):
    assert is_stopping_set(code_7_6, q7_support.indices())
    assert not is_stopping_set(code_7_6, [0])
    with pytest.raises(InvalidParameterError):
        is_stopping_set(code_7_6, [])


def test_export_alist(code_5_3):
    lines = export_alist(code_5_3).splitlines()
    assert lines[0] == "25 15"
    assert lines[1] == "3 5"
    assert lines[2] == " ".join(["3"] * 25)
    assert lines[3] == " ".join(["5"] * 15)
    assert len(lines) == 4 + 25 + 15
    # column 0 = (0, 0), column 1 = (1, 0), column 5 = (0, 1)
    assert lines[4] == "1 6 11"
    assert lines[5] == "2 7 12"
    assert lines[9] == "1 7 13"
    # first check row: every column with x = 0
    assert lines[4 + 25] == "1 6 11 16 21"


def test_rank_and_dimension_for_all_small_codes():
    for q in primerange(3, 14):
        for m in range(1, q + 1):
            code = build_code(q, m)
            assert expand_parity_check(code).rank == q * m - m + 1
            assert code.dimension == q * q - q * m + m - 1


@pytest.mark.parametrize("q", list(primerange(3, 98)))
def test_column_entries_invert_to_column(q):
    for y in range(q):
        for x in range(q):
            c = ColumnXY(x=x, y=y)
            assert column_xy(column_entries(c, q, 2), q) == c


@pytest.mark.parametrize("q", list(primerange(3, 14)))
def test_expanded_columns_match_column_entries(q):
    code = build_code(q, q)
    dense = expand_parity_check(code).to_dense()
    for y in range(q):
        for x in range(q):
            c = ColumnXY(x=x, y=y)
            entries = column_entries(c, q, q)
            assert column_xy(entries, q) == c
            assert code.column(y * q + x) == c
            expected = [0] * (q * q)
            for j, r in enumerate(entries):
                expected[j * q + r] = 1
            assert dense[:, y * q + x].tolist() == expected


@pytest.mark.parametrize("q", list(primerange(3, 14)))
def test_every_code_is_regular(q):
    for m in range(1, q + 1):
        dense = expand_parity_check(build_code(q, m)).to_dense()
        assert (dense.sum(axis=0) == m).all()
        assert (dense.sum(axis=1) == q).all()


def parse_alist(text):
    """Dense 0/1 rows from alist text, read only through the column lists."""
    tokens = [[int(t) for t in line.split()] for line in text.splitlines() if line.strip()]
    n_cols, n_rows = tokens[0]
    max_col, max_row = tokens[1]
    col_degrees, row_degrees = tokens[2], tokens[3]
    assert len(col_degrees) == n_cols and len(row_degrees) == n_rows
    matrix = [[0] * n_cols for _ in range(n_rows)]
    for c, entries in enumerate(tokens[4 : 4 + n_cols]):
        assert len(entries) == max_col
        ones = [r for r in entries if r]
        assert len(ones) == col_degrees[c]
        for r in ones:
            matrix[r - 1][c] = 1
    for r, entries in enumerate(tokens[4 + n_cols : 4 + n_cols + n_rows]):
        assert len(entries) == max_row
        assert sorted(c - 1 for c in entries if c) == [c for c in range(n_cols) if matrix[r][c]]
    return matrix


@pytest.mark.parametrize("q,m", [(3, 2), (5, 3), (5, 5), (7, 4), (11, 6)])
def test_alist_reproduces_parity_check(q, m):
    code = build_code(q, m)
    assert parse_alist(export_alist(code)) == expand_parity_check(code).to_dense().tolist()
