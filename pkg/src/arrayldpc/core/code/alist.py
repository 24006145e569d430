"""alist (MacKay) serialization of H(q, m)."""

from arrayldpc.models.code import ArrayCode


def _padded(values: list[int], width: int) -> str:
    return " ".join(str(v) for v in values + [0] * (width - len(values)))


def export_alist(code: ArrayCode) -> str:
    """alist text of the expanded parity-check matrix.

    Lines: ``N M``, max column/row degrees, the N column degrees, the M row degrees,
    then N lines of 1-based row indices and M lines of 1-based column indices,
    zero-padded to the max degree.
    """
    n_cols, n_rows = code.length, code.n_checks
    col_lists = [[r + 1 for r in code.column_rows(c)] for c in range(n_cols)]
    row_lists: list[list[int]] = [[] for _ in range(n_rows)]
    for c, rows in enumerate(col_lists):
        for r in rows:
            row_lists[r - 1].append(c + 1)

    max_col = max(len(c) for c in col_lists)
    max_row = max(len(r) for r in row_lists)
    lines = [
        f"{n_cols} {n_rows}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in col_lists),
        " ".join(str(len(r)) for r in row_lists),
    ]
    lines.extend(_padded(c, max_col) for c in col_lists)
    lines.extend(_padded(r, max_row) for r in row_lists)
    return "\n".join(lines) + "\n"
