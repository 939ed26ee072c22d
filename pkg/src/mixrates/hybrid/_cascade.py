"""Dyadic residual cascade and per-level lattice coefficients."""

__docformat__ = "restructuredtext"
__all__ = [
    "MultiScaleCoeffs",
    "cascade_step",
    "hybrid_coefficients",
    "level_coefficients",
    "level_inputs",
    "residual_cascade",
    "telescoping_deviation",
    "truncate_hybrid",
]

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from mixrates._constants import DEFAULT_MIN_RADIUS
from mixrates._errors import WindowError
from mixrates.custom_types import Evaluable, IntArray
from mixrates.hybrid._plan import HybridPlan
from mixrates.kernels import DualKernelTable, GridFunction, SpectralCutoff, SpectralGrid
from mixrates.location import LatticeCoefficients, coefficients, reconstruct, smooth
from mixrates.mixture import FiniteGaussMixture


def cascade_step(
    residual: GridFunction, sigma: float, kernel: DualKernelTable | SpectralCutoff
) -> tuple[GridFunction, GridFunction]:
    """
    One step ``L = chi_sigma * Delta`` and ``Delta' = Delta - L``.

    :param residual: Previous residual (the target itself before level 0).

    :param sigma: Scale of the new level.

    :param kernel: Kernel table or bare cutoff.

    :return: The level input ``L`` and the new residual ``Delta'``.
    """
    level_input = smooth(residual, sigma, kernel)
    return level_input, residual - level_input


def _sample(f0: Evaluable | GridFunction, J: int, grid: SpectralGrid | None) -> GridFunction:
    if isinstance(f0, GridFunction):
        return f0
    if grid is None:
        grid = SpectralGrid.covering(DEFAULT_MIN_RADIUS, 2.0**-J / 16.0)
    return GridFunction.sample(f0, grid)


def residual_cascade(
    f0: Evaluable | GridFunction,
    J: int,
    kernel: DualKernelTable | SpectralCutoff,
    grid: SpectralGrid | None = None,
) -> list[GridFunction]:
    """
    Residuals ``Delta_0 = f0 - chi_{sigma_0} * f0`` and ``Delta_j = Delta_{j-1} - chi_{sigma_j} * Delta_{j-1}``.

    :param f0: Target, callable or tabulated.

    :param J: Finest level, at least 1.

    :param kernel: Kernel table or bare cutoff.

    :param grid: Grid for a callable target.

    :return: ``[Delta_0, ..., Delta_J]`` on a shared grid.
    :raises ValueError: If ``J < 1``.

    """
    if J < 1:
        raise ValueError(f"J must be at least 1, got {J}")
    residual = _sample(f0, J, grid)
    residuals = []
    for j in range(J + 1):
        _, residual = cascade_step(residual, 2.0**-j, kernel)
        residuals.append(residual)
    return residuals


def level_inputs(
    f0: Evaluable | GridFunction,
    J: int,
    kernel: DualKernelTable | SpectralCutoff,
    grid: SpectralGrid | None = None,
) -> list[GridFunction]:
    """
    Inputs ``chi_{sigma_0} * f0`` and ``chi_{sigma_j} * Delta_{j-1}`` of the level expansions.

    Their sum is ``f0 - Delta_J``.

    :param f0: Target, callable or tabulated.

    :param J: Finest level.

    :param kernel: Kernel table or bare cutoff.

    :param grid: Grid for a callable target.

    :return: ``[L_0, ..., L_J]`` on a shared grid.
    """
    residual = _sample(f0, J, grid)
    inputs = []
    for j in range(J + 1):
        level_input, residual = cascade_step(residual, 2.0**-j, kernel)
        inputs.append(level_input)
    return inputs


def telescoping_deviation(
    residuals: Sequence[GridFunction],
    f0: GridFunction,
    kernel: DualKernelTable | SpectralCutoff,
) -> float:
    """
    Largest ``|Delta_j - (f0 - chi_{sigma_j} * f0)|`` over levels and grid nodes.

    :param residuals: Recursive residuals on the grid of ``f0``.

    :param f0: Tabulated target.

    :param kernel: Kernel table or bare cutoff.

    :return: The deviation.
    """
    worst = 0.0
    for j, residual in enumerate(residuals):
        direct = f0 - smooth(f0, 2.0**-j, kernel)
        worst = max(worst, (residual - direct).sup())
    return worst


@dataclass(frozen=True, slots=True, eq=False)
class MultiScaleCoeffs:
    """
    Per-level coefficients ``u_jk`` of the atoms ``phi((x - h sigma_j k) / sigma_j)``.

    :ivar levels: Coefficients of levels ``0..J``, in order.
    """

    levels: tuple[LatticeCoefficients, ...]

    def __post_init__(self):
        """Check the dyadic scales."""
        for j, level in enumerate(self.levels):
            if level.sigma != 2.0**-j:
                raise ValueError(f"Level {j} has scale {level.sigma}, expected {2.0**-j}")

    @property
    def J(self) -> int:
        """
        Get the finest level.

        :return: ``len(levels) - 1``.
        """
        return len(self.levels) - 1

    @property
    def l1(self) -> float:
        """
        Get ``sum_j sum_k |u_jk|``.

        :return: Total absolute coefficient mass.
        """
        return sum(level.l1 for level in self.levels)

    @property
    def max_abs(self) -> float:
        """
        Get ``max_jk |u_jk|``.

        :return: Largest magnitude.
        """
        return max((level.max_abs for level in self.levels), default=0.0)

    def __len__(self) -> int:
        """Return the number of tabulated coefficients."""
        return sum(len(level) for level in self.levels)

    def reconstruct(self) -> FiniteGaussMixture:
        """
        Mixture of every tabulated atom of every level.

        :return: The untruncated mixture.
        """
        mixture = FiniteGaussMixture.empty()
        for level in self.levels:
            mixture = mixture + reconstruct(level)
        return mixture


def level_coefficients(
    level_input: GridFunction,
    j: int,
    plan: HybridPlan,
    kernel: DualKernelTable | SpectralCutoff,
) -> LatticeCoefficients:
    """
    Coefficients of level ``j``, with the boundary check of a capped window.

    :param level_input: ``L_j`` on the shared grid.

    :param j: Level.

    :param plan: Cell parameters.

    :param kernel: Kernel table or bare cutoff.

    :return: The coefficients.
    :raises WindowError: If a boundary coefficient exceeds ``sigma_J^beta / 10`` on a capped
        window; the boundary is reported as ``(j, k)``.

    """
    threshold = plan.threshold / 10.0 if plan.capped else None
    try:
        return coefficients(
            level_input,
            plan.h,
            plan.sigma(j),
            kernel,
            k_range=plan.k_range(j),
            boundary_threshold=threshold,
        )
    except WindowError as error:
        raise WindowError((j, int(error.boundary)), error.value, error.threshold) from error


def hybrid_coefficients(
    f0: Evaluable | GridFunction,
    plan: HybridPlan,
    kernel: DualKernelTable | SpectralCutoff,
    bandwidth: float | None = None,
) -> MultiScaleCoeffs:
    """
    Coefficients of all levels, from ``chi_{sigma_0} * f0`` and ``chi_{sigma_j} * Delta_{j-1}``.

    :param f0: Target, callable or tabulated on a grid from ``plan.spectral_grid``.

    :param plan: Cell parameters.

    :param kernel: Kernel table or bare cutoff.

    :param bandwidth: Largest angular frequency of ``f0``, when known.

    :return: The coefficients.
    :raises WindowError: If a capped window cuts through significant coefficients.

    """
    grid = None if isinstance(f0, GridFunction) else plan.spectral_grid(bandwidth)
    inputs = level_inputs(f0, plan.J, kernel, grid)
    return MultiScaleCoeffs(
        tuple(level_coefficients(inputs[j], j, plan, kernel) for j in plan.levels)
    )


def truncate_hybrid(
    coeffs: MultiScaleCoeffs, plan: HybridPlan
) -> tuple[IntArray, FiniteGaussMixture]:
    """
    Keep ``(j, k)`` with ``|u_jk| > sigma_J^beta`` and ``|mu_jk| <= zeta_j + tail_margin``.

    :param coeffs: Coefficients of all levels.

    :param plan: Cell parameters.

    :return: The index set as rows ``(j, k)`` and the mixture of its atoms.
    :raises ValueError: If the coefficients have another finest level.

    """
    if coeffs.J != plan.J:
        raise ValueError(f"Coefficients reach level {coeffs.J}, the plan reaches {plan.J}")
    rows = []
    mixture = FiniteGaussMixture.empty()
    for j, level in enumerate(coeffs.levels):
        mask = (np.abs(level.values) > plan.threshold) & (
            np.abs(level.locations) <= plan.mu_threshold(j)
        )
        kept = level.select(mask)
        rows.append(np.column_stack([np.full(len(kept), j, dtype=np.int64), kept.k]))
        mixture = mixture + reconstruct(kept)
    return np.concatenate(rows, axis=0), mixture
