"""Slope fitting and small numerical helpers shared by the schemes and the harness."""

__docformat__ = "restructuredtext"
__all__ = ["SlopeFit", "fit_loglog_slope", "fit_slope", "sup_abs"]

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import stats

from mixrates.custom_types import FloatArray


@dataclass(frozen=True, slots=True)
class SlopeFit:
    """
    Ordinary least-squares line through a sweep.

    :ivar slope: Fitted slope.
    :ivar intercept: Fitted intercept.
    :ivar r_squared: Coefficient of determination.
    :ivar points: Number of points used after dropping.
    """

    slope: float
    intercept: float
    r_squared: float
    points: int


def fit_slope(
    xs: Sequence[float] | FloatArray,
    ys: Sequence[float] | FloatArray,
    drop_first: int = 0,
) -> SlopeFit:
    """
    Fit ``ys`` against ``xs`` by ordinary least squares.

    Non-finite pairs are skipped before ``drop_first`` leading points are dropped.

    :param xs: Abscissae.

    :param ys: Ordinates.

    :param drop_first: Number of leading (coarsest) points to discard.

    :return: The fitted line.
    :raises ValueError: If fewer than two usable points remain.

    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"Abscissae and ordinates differ in shape: {x.shape} vs {y.shape}")
    keep = np.isfinite(x) & np.isfinite(y)
    x, y = x[keep][drop_first:], y[keep][drop_first:]
    if x.size < 2:
        raise ValueError(f"Need at least two finite points to fit a slope, got {x.size}")
    result = stats.linregress(x, y)
    return SlopeFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        r_squared=float(result.rvalue**2),
        points=int(x.size),
    )


def fit_loglog_slope(
    xs: Sequence[float] | FloatArray,
    ys: Sequence[float] | FloatArray,
    drop_first: int = 0,
) -> SlopeFit:
    """
    Fit ``log ys`` against ``log xs``; non-positive values are skipped.

    :param xs: Positive abscissae.

    :param ys: Positive ordinates.

    :param drop_first: Number of leading points to discard.

    :return: The fitted line in log-log coordinates.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        lx = np.where(x > 0, np.log(np.where(x > 0, x, 1.0)), np.nan)
        ly = np.where(y > 0, np.log(np.where(y > 0, y, 1.0)), np.nan)
    return fit_slope(lx, ly, drop_first)


def sup_abs(values: FloatArray) -> float:
    """Return ``max |values|``, or 0 for an empty array."""
    return float(np.max(np.abs(values))) if values.size else 0.0
