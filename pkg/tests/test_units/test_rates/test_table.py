"""
Test suite for rate tables.

Validates that:
1. The symbolic table carries the formula of every regime.
2. Grid tables render in markdown and CSV, with an exact mode.
3. Empty grids and unknown formats are rejected.
"""

__docformat__ = "restructuredtext"

import csv
import io
import math

import pytest

from mixrates._enums import MixtureKind
from mixrates.rates import (
    MAIN_KINDS,
    REPRESENTATIVE_POINTS,
    TABLE_COLUMNS,
    render_table,
    symbolic_table,
    table_column,
    table_formulas,
)


def test_representative_points():
    """One point per column, left to right."""
    assert [table_column(b, p) for b, p in REPRESENTATIVE_POINTS] == [0, 1, 2, 3]


def test_formulas():
    """Each family's formula per column."""
    formulas = table_formulas()
    expected = {
        MixtureKind.LOCATION: ["2β/(3β+1)", "2β/(3β+1)", "2β/(2β+1+2β/p)", "2β/(2β+1+2β/p)"],
        MixtureKind.LOCATION_SCALE: ["2β/(3β+2)", "2β/(2β+1+2β/p)", "2β/(2β+1+2β/p)", "β/(β+1)"],
        MixtureKind.HYBRID: ["2β/(3β+1)", "p/(p+1)", "p/(p+1)", "2β/(2β+1)"],
    }
    for kind in MAIN_KINDS:
        assert [formulas[(kind, c)] for c in range(4)] == expected[kind]


def test_symbolic_csv():
    """CSV symbolic table: header of regimes and one row per family."""
    rows = list(csv.reader(io.StringIO(symbolic_table("csv"))))
    assert rows[0] == ["kind", *TABLE_COLUMNS]
    assert [row[0] for row in rows[1:]] == ["location", "location_scale", "hybrid"]


def test_symbolic_markdown():
    """Markdown symbolic table has a separator and three body rows."""
    lines = symbolic_table().strip().splitlines()
    assert len(lines) == 5
    assert lines[1] == "|" + "---|" * 5


def test_render_csv():
    """One CSV row per (kind, beta, p)."""
    text = render_table([1, 2], [1, 4, math.inf], fmt="csv")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 3 * 2 * 3
    first = rows[0]
    assert first["kind"] == "location"
    assert first["beta"] == "1"
    assert float(first["q"]) == pytest.approx(0.5)
    assert {row["p"] for row in rows} == {"1", "4", "inf"}


def test_render_markdown_exact():
    """Exact mode prints fractions in markdown cells."""
    text = render_table([1], [4], exact=True, kinds=[MixtureKind.LOCATION])
    lines = text.strip().splitlines()
    assert lines[0] == "| kind | β | p=4 |"
    assert "4/7 (2β/(2β+1+2β/p);" in lines[2]


@pytest.mark.parametrize(
    ("betas", "ps", "fmt", "match"),
    [([], [1], "markdown", "nonempty"), ([1], [], "csv", "nonempty"), ([1], [1], "latex", "Unknown table format")],
)
def test_invalid(betas, ps, fmt, match):
    """Empty grids and unknown formats are rejected."""
    with pytest.raises(ValueError, match=match):
        render_table(betas, ps, fmt=fmt)


def test_symbolic_unknown_format():
    """Unknown symbolic format is rejected."""
    with pytest.raises(ValueError, match="Unknown table format"):
        symbolic_table("html")
