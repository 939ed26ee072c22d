"""Annulus statistics, count bounds and prior-mass geometry of the hybrid cascade."""

__docformat__ = "restructuredtext"
__all__ = [
    "HybridCells",
    "annulus_spread",
    "annulus_trend",
    "hybrid_cells",
    "hybrid_lambda_bound",
    "mass_bound",
]

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from mixrates.custom_types import FloatArray, IntArray
from mixrates.hybrid._plan import HybridPlan
from mixrates.mixture import ApproxReport


def _finite_annuli(report: ApproxReport) -> list:
    if not report.annuli:
        raise ValueError("Report carries no annulus errors")
    return [a for a in report.annuli if math.isfinite(a.sup_error)]


def annulus_trend(report: ApproxReport) -> float:
    """
    Spearman correlation of level against raw annulus error.

    Negative values mean the error shrinks from the far tail towards the centre.

    :param report: Multi-scale report.

    :return: The rank correlation over non-empty annuli, NaN with fewer than three.
    :raises ValueError: If the report has no annuli.

    """
    annuli = _finite_annuli(report)
    if len(annuli) < 3:
        return math.nan
    rho, _ = stats.spearmanr([a.level for a in annuli], [a.sup_error for a in annuli])
    return float(rho)


def annulus_spread(report: ApproxReport) -> float:
    """
    Largest normalized annulus error relative to the innermost one.

    :param report: Multi-scale report.

    :return: ``max_j e_j / sigma_j^beta`` divided by ``e_J / sigma_J^beta``.
    :raises ValueError: If the report has no annuli or the innermost error is zero.

    """
    annuli = _finite_annuli(report)
    innermost = report.annuli[-1].normalized_error
    if not innermost > 0.0:
        raise ValueError(f"Innermost normalized error must be positive, got {innermost}")
    return max(a.normalized_error for a in annuli) / innermost


def hybrid_lambda_bound(plan: HybridPlan) -> float:
    """
    Shape of the index-set size bound without its constant.

    ``min(sigma_J^-(beta+1), J log J sigma_J^(-2 beta/p))`` when ``p <= 2 beta`` and
    ``J log J / sigma_J`` otherwise.

    :param plan: Cell parameters.

    :return: The bound.
    """
    sigma_j = plan.sigma(plan.J)
    j_log_j = plan.J * max(math.log(plan.J), 1.0)
    if plan.p <= 2.0 * plan.beta:
        return min(sigma_j ** -(plan.beta + 1.0), j_log_j * sigma_j ** (-2.0 * plan.beta / plan.p))
    return j_log_j / sigma_j


def mass_bound(plan: HybridPlan, f_l1: float) -> float:
    """
    Coefficient mass bound ``4 ||f0||_1 / sigma_J``.

    :param plan: Cell parameters.

    :param f_l1: ``||f0||_1``.

    :return: The bound.
    """
    return 4.0 * f_l1 / plan.sigma(plan.J)


@dataclass(frozen=True, slots=True, eq=False)
class HybridCells:
    """
    Scale windows ``U_j``, site cells ``V_jk`` and their products ``W_jk``.

    :ivar scale_windows: ``(sigma_j, sigma_j (1 + sigma_J^beta))`` per level.
    :ivar site_radii: Half width ``sigma_j sigma_J^beta`` per level.
    :ivar index: Retained rows ``(j, k)``.
    :ivar sites: Site ``mu_jk`` per retained row.
    """

    scale_windows: tuple[tuple[float, float], ...]
    site_radii: tuple[float, ...]
    index: IntArray = field(repr=False)
    sites: FloatArray = field(repr=False)

    @property
    def scales_disjoint(self) -> bool:
        """
        Check that the scale windows of different levels do not overlap.

        :return: True when every ``U_j`` lies strictly above ``U_{j+1}``.
        """
        windows = self.scale_windows
        return all(windows[j][0] > windows[j + 1][1] for j in range(len(windows) - 1))

    @property
    def sites_disjoint(self) -> bool:
        """
        Check that site cells of one level do not overlap.

        :return: True when, within every level, consecutive cells are separated.
        """
        for j, radius in enumerate(self.site_radii):
            sites = np.sort(self.sites[self.index[:, 0] == j])
            if sites.size > 1 and np.any(np.diff(sites) <= 2.0 * radius):
                return False
        return True

    @property
    def disjoint(self) -> bool:
        """
        Check that all ``W_jk`` are pairwise disjoint.

        :return: True when scales and sites are both separated.
        """
        return self.scales_disjoint and self.sites_disjoint


def hybrid_cells(plan: HybridPlan, retained: IntArray) -> HybridCells:
    """
    Cells around the retained atoms of a multi-scale mixture.

    :param plan: Cell parameters.

    :param retained: Index set as rows ``(j, k)``.

    :return: The cells.
    """
    index = np.asarray(retained, dtype=np.int64).reshape(-1, 2)
    eps = plan.threshold
    sigmas = np.array(plan.sigmas)
    return HybridCells(
        scale_windows=tuple((s, s * (1.0 + eps)) for s in plan.sigmas),
        site_radii=tuple(s * eps for s in plan.sigmas),
        index=index,
        sites=plan.h * sigmas[index[:, 0]] * index[:, 1],
    )
