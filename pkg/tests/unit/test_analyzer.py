from pathlib import Path

import pytest

from arrayldpc.core.analyzer import TABLE_COLUMNS, ArrayCodeAnalyzer, table_to_csv
from arrayldpc.core.code import build_code
from arrayldpc.models.config import ArrayLDPCConfig, DistanceSettings, TableSettings
from arrayldpc.models.result import TableRow

GOLDEN = Path(__file__).parent.parent / "golden"


def test_table_columns():
    assert [name for name, _, _ in TABLE_COLUMNS] == ["d7", "d6", "h5", "d5", "h4", "d4"]


def test_csv_format():
    row = TableRow(q=7, cells={"d7": "14", "d6": "12", "h5": "9", "d5": "12", "h4": "8", "d4": "8"})
    assert table_to_csv([row]) == (GOLDEN / "table_q7.csv").read_text(encoding="utf-8")


def test_rows_below_m_are_dashes():
    with ArrayCodeAnalyzer() as analyzer:
        row = analyzer.table_row(3)
    assert set(row.cells.values()) == {"-"}


def test_minimum_distance_cell_exact():
    with ArrayCodeAnalyzer() as analyzer:
        assert analyzer.minimum_distance_cell(build_code(7, 6)) == "12"


def test_minimum_distance_cell_bracket_above_limit():
    config = ArrayLDPCConfig(distance=DistanceSettings(enumeration_limit_bits=5, heuristic_budget=500))
    with ArrayCodeAnalyzer(config) as analyzer:
        cell = analyzer.minimum_distance_cell(build_code(7, 6))
    assert cell.startswith("<=")
    assert int(cell[2:]) >= 12


def test_minimum_distance_cell_with_lower_bound_cap():
    config = ArrayLDPCConfig(
        distance=DistanceSettings(enumeration_limit_bits=5, heuristic_budget=500),
        table=TableSettings(lower_bound_cap=12),
    )
    with ArrayCodeAnalyzer(config) as analyzer:
        assert analyzer.minimum_distance_cell(build_code(7, 6)) == "12"


def test_stopping_distance_cell_beyond_cap():
    config = ArrayLDPCConfig(distance=DistanceSettings(stopping_cap=5))
    with ArrayCodeAnalyzer(config) as analyzer:
        assert analyzer.stopping_distance_cell(build_code(7, 4)) == ">5"



def test_stopping_distance_never_exceeds_minimum_distance():
    lines = (GOLDEN / "table_q7.csv").read_text(encoding="utf-8").splitlines()
    row = dict(zip(lines[0].split(","), lines[1].split(",")))
    for m in (4, 5):
        assert int(row[f"h{m}"]) <= int(row[f"d{m}"])


@pytest.mark.slow
def test_computed_q7_cells_keep_stopping_below_minimum():
    with ArrayCodeAnalyzer() as analyzer:
        code = build_code(7, 5)
        d = analyzer.minimum_distance_cell(code)
        h = analyzer.stopping_distance_cell(code)
    assert (h, d) == ("9", "12")
    assert int(h) <= int(d)
