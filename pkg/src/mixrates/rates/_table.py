"""Markdown and CSV renderings of the rate exponents over a ``(beta, p)`` grid."""

__docformat__ = "restructuredtext"
__all__ = [
    "MAIN_KINDS",
    "REPRESENTATIVE_POINTS",
    "render_table",
    "symbolic_table",
    "table_formulas",
]

import csv
import io
import math
from collections.abc import Sequence
from fractions import Fraction

from mixrates._enums import MixtureKind
from mixrates.rates._exponent import rate_exponent
from mixrates.rates._spec import TABLE_COLUMNS, Number, RateResult, RateSpec

MAIN_KINDS = (MixtureKind.LOCATION, MixtureKind.LOCATION_SCALE, MixtureKind.HYBRID)

REPRESENTATIVE_POINTS: tuple[tuple[int, Fraction], ...] = (
    (3, Fraction(1)),
    (3, Fraction(9, 5)),
    (3, Fraction(4)),
    (3, Fraction(7)),
)
"""One ``(beta, p)`` strictly inside each summary-table column, left to right."""

_FORMATS = ("markdown", "csv")


def _number_text(x: Number) -> str:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Fraction):
        return str(x)
    return f"{x:g}"


def _cell_text(result: RateResult, exact: bool) -> str:
    return f"{result.q_text(exact)} ({result.term}; {result.regime})"


def table_formulas(
    kinds: Sequence[MixtureKind] = MAIN_KINDS,
) -> dict[tuple[MixtureKind, int], str]:
    """
    Get the formula of ``q`` in every summary-table cell.

    Each cell is evaluated at its point of :data:`REPRESENTATIVE_POINTS`, so the
    formulas come from the same rules as the numeric exponents.

    :param kinds: Row families.

    :return: Formula keyed by ``(kind, column)``.
    """
    formulas = {}
    for kind in kinds:
        for beta, p in REPRESENTATIVE_POINTS:
            spec = RateSpec(MixtureKind(kind), beta, p)
            formulas[(spec.kind, spec.column)] = rate_exponent(spec).term
    return formulas


def symbolic_table(fmt: str = "markdown", kinds: Sequence[MixtureKind] = MAIN_KINDS) -> str:
    """
    Render the summary table of ``q`` formulas, one row per family and one column per regime.

    :param fmt: ``"markdown"`` or ``"csv"``.

    :param kinds: Row families.

    :return: The rendered table.
    :raises ValueError: If the format is unknown.

    """
    if fmt not in _FORMATS:
        raise ValueError(f"Unknown table format: {fmt!r}. Choose one of {list(_FORMATS)}.")
    formulas = table_formulas(kinds)
    rows = [
        [MixtureKind(kind).label] + [formulas[(MixtureKind(kind), c)] for c in range(len(TABLE_COLUMNS))]
        for kind in kinds
    ]
    header = ["kind", *TABLE_COLUMNS]
    if fmt == "csv":
        return _csv_text(header, rows)
    return _markdown_text(header, rows)


def render_table(
    betas: Sequence[Number],
    ps: Sequence[Number],
    fmt: str = "markdown",
    exact: bool = False,
    kinds: Sequence[MixtureKind] = MAIN_KINDS,
) -> str:
    """
    Render ``q`` over a ``(beta, p)`` grid.

    Markdown gives one row per ``(kind, beta)`` and one column per ``p``; each cell
    shows ``q``, the formula that fired and the regime label. CSV gives one row per
    ``(kind, beta, p)`` with columns ``kind, beta, p, q, log_power, regime, formula``.

    :param betas: Hölder orders, nonempty.

    :param ps: Moment indices, nonempty; ``math.inf`` allowed.

    :param fmt: ``"markdown"`` or ``"csv"``.

    :param exact: Print rational ``q`` as fractions.

    :param kinds: Families to include.

    :return: The rendered table.
    :raises ValueError: If a grid is empty or the format is unknown.

    """
    if not betas or not ps:
        raise ValueError(f"betas and ps must be nonempty, got {len(betas)} and {len(ps)}")
    if fmt not in _FORMATS:
        raise ValueError(f"Unknown table format: {fmt!r}. Choose one of {list(_FORMATS)}.")
    kinds = [MixtureKind(kind) for kind in kinds]

    if fmt == "csv":
        header = ["kind", "beta", "p", "q", "log_power", "regime", "formula"]
        rows = []
        for kind in kinds:
            for beta in betas:
                for p in ps:
                    result = rate_exponent(RateSpec(kind, beta, p))
                    rows.append(
                        [
                            kind.label,
                            _number_text(beta),
                            _number_text(p),
                            result.q_text(exact) if exact else repr(result.q),
                            repr(result.log_power),
                            result.regime,
                            result.term,
                        ]
                    )
        return _csv_text(header, rows)

    header = ["kind", "β", *(f"p={_number_text(p)}" for p in ps)]
    rows = [
        [kind.label, _number_text(beta)]
        + [_cell_text(rate_exponent(RateSpec(kind, beta, p)), exact) for p in ps]
        for kind in kinds
        for beta in betas
    ]
    return _markdown_text(header, rows)


def _markdown_text(header: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()
