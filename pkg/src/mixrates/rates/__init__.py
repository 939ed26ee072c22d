"""
Closed-form posterior contraction rates of the Gaussian mixture priors.

``rate_exponent`` maps a family and the regularity ``(beta, p)`` of the regression
function and the design to ``epsilon_n^2 = n^-q (log n)^t``; ``render_table`` and
``symbolic_table`` lay the exponents out by regime.
"""

__docformat__ = "restructuredtext"
__all__ = [
    "MAIN_KINDS",
    "REPRESENTATIVE_POINTS",
    "TABLE_COLUMNS",
    "DominanceCheck",
    "Number",
    "RateResult",
    "RateSpec",
    "dominance_check",
    "epsilon_n",
    "rate_exponent",
    "render_table",
    "symbolic_table",
    "table_column",
    "table_formulas",
]

from mixrates.rates._exponent import DominanceCheck, dominance_check, epsilon_n, rate_exponent
from mixrates.rates._spec import TABLE_COLUMNS, Number, RateResult, RateSpec, table_column
from mixrates.rates._table import (
    MAIN_KINDS,
    REPRESENTATIVE_POINTS,
    render_table,
    symbolic_table,
    table_formulas,
)
