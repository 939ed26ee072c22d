"""Sweeps of the approximation schemes and their complexity-accuracy frontiers."""

__docformat__ = "restructuredtext"
__all__ = [
    "FrontierComparison",
    "FrontierFit",
    "SWEEP_COLUMNS",
    "SweepCell",
    "SweepResult",
    "SweepRow",
    "compare_frontiers",
    "fit_frontier",
    "predicted_count_slope",
    "predicted_frontier_exponent",
    "run_cell",
    "run_sweep",
    "write_sweep",
]

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import astuple, dataclass, fields
from pathlib import Path

import numpy as np

from mixrates._constants import LOG_SWEEP
from mixrates._enums import MixtureKind
from mixrates._errors import QuadratureError, WindowError
from mixrates.harness._io import write_csv, write_json
from mixrates.harness.catalog import DesignDistribution, TestFunction, design, test_function
from mixrates.harness.config import ExperimentConfig
from mixrates.hybrid import HybridPlan, hybrid_approx
from mixrates.kernels import SpectralCutoff, build_cutoff
from mixrates.location import LocationPlan, location_approx
from mixrates.mixture import ApproxReport
from mixrates.utils import fit_loglog_slope

DROP_COARSEST = 2
"""Coarsest cells dropped from every slope fit."""
FRONTIER_TOLERANCE = 0.25


@dataclass(frozen=True, slots=True, order=True)
class SweepCell:
    """
    One ``(beta, p, resolution)`` cell.

    :ivar beta: Hölder order of the plan.
    :ivar p: Moment index of the plan.
    :ivar resolution: Scale ``sigma`` or finest level ``J``.
    """

    beta: float
    p: float
    resolution: float

    @property
    def sigma(self) -> float:
        """Scale of the cell; ``2^-J`` for hybrid cells."""
        return self.resolution


@dataclass(frozen=True, slots=True)
class SweepRow:
    """
    Measurements of one cell; failed cells carry NaN metrics and the error in ``status``.

    :ivar config_hash: Hash of the generating config.
    :ivar scheme: Scheme label.
    :ivar test_function: Name of ``f0``.
    :ivar design: Name of ``Q0``.
    :ivar beta: Hölder order of the plan.
    :ivar p: Moment index of the plan.
    :ivar resolution: ``sigma`` or ``J``.
    :ivar sigma: Finest scale.
    :ivar h: Bandwidth.
    :ivar lambda_size: ``|Lambda|``.
    :ivar sup_error_core: Core grid sup error.
    :ivar sup_error_global: Whole-grid sup error.
    :ivar untruncated_error: Core error of the full-window reconstruction.
    :ivar design_l2: Monte Carlo ``int |f_M - f0|^2 dQ0``.
    :ivar design_bound: ``sum_I sup_I error^2 Q0(I)`` over the error regions.
    :ivar predicted_exponent: Predicted frontier exponent of ``N(e)``.
    :ivar status: ``"ok"`` or the error message.
    """

    config_hash: str
    scheme: str
    test_function: str
    design: str
    beta: float
    p: float
    resolution: float
    sigma: float
    h: float
    lambda_size: int
    sup_error_core: float
    sup_error_global: float
    untruncated_error: float
    design_l2: float
    design_bound: float
    predicted_exponent: float
    status: str

    @property
    def ok(self) -> bool:
        """Whether the cell ran."""
        return self.status == "ok"


SWEEP_COLUMNS = tuple(f.name for f in fields(SweepRow))


def predicted_frontier_exponent(scheme: MixtureKind, beta: float, p: float) -> float:
    """
    Get the predicted exponent ``a`` of ``N(e) ~ e^-a`` for the number of components.

    Location: ``min((beta + 1) / beta, (2 beta / p + 1) / beta)``. Hybrid:
    ``min(beta + 1, 2 beta / p) / beta`` for ``p <= 2 beta``, else ``1 / beta``.

    :param scheme: Location or hybrid.

    :param beta: Hölder order.

    :param p: Moment index.

    :return: The exponent.
    """
    if MixtureKind(scheme) is MixtureKind.LOCATION:
        return min(beta + 1.0, 2.0 * beta / p + 1.0) / beta
    if p <= 2.0 * beta:
        return min(beta + 1.0, 2.0 * beta / p) / beta
    return 1.0 / beta


def predicted_count_slope(scheme: MixtureKind, beta: float, p: float) -> float:
    """
    Get the predicted slope of ``log |Lambda|`` against ``log sigma``.

    :param scheme: Location or hybrid.

    :param beta: Hölder order.

    :param p: Moment index.

    :return: ``-beta`` times :func:`predicted_frontier_exponent`.
    """
    return -beta * predicted_frontier_exponent(scheme, beta, p)


def _plan(config: ExperimentConfig, cell: SweepCell) -> LocationPlan | HybridPlan:
    if config.scheme is MixtureKind.LOCATION:
        return LocationPlan.from_sigma(
            cell.resolution, cell.beta, cell.p, h_max=config.h_max, radius_cap=config.radius_cap
        )
    return HybridPlan.from_levels(
        int(cell.resolution), cell.beta, cell.p, h_max=config.h_max, radius_cap=config.radius_cap
    )


def _design_bound(report: ApproxReport, q0: DesignDistribution) -> float:
    outer_sup = report.sup_error_global
    if not report.annuli:
        core = report.core_radius
        inside = report.sup_error_core**2 * q0.annulus_mass(0.0, core)
        return inside + outer_sup**2 * q0.annulus_mass(core, math.inf)
    total = 0.0
    for annulus in report.annuli:
        sup = annulus.sup_error if math.isfinite(annulus.sup_error) else outer_sup
        total += sup**2 * q0.annulus_mass(annulus.inner, annulus.outer)
    widest = max(a.outer for a in report.annuli)
    return total + outer_sup**2 * q0.annulus_mass(widest, math.inf)


def run_cell(
    config: ExperimentConfig,
    cell: SweepCell,
    f0: TestFunction,
    q0: DesignDistribution,
    kernel: SpectralCutoff,
    rng: np.random.Generator,
    verbose: bool = False,
) -> tuple[SweepRow, float]:
    """
    Run one scheme cell and measure it.

    :param config: Sweep config.

    :param cell: Cell.

    :param f0: Regression function.

    :param q0: Design.

    :param kernel: Spectral cutoff.

    :param rng: Stream of the design-weighted Monte Carlo.

    :param verbose: Print the scheme stages.

    :return: The row and the runtime in seconds.
    """
    start = time.perf_counter()
    plan = _plan(config, cell)
    sigma = cell.resolution if config.scheme is MixtureKind.LOCATION else 2.0 ** -int(cell.resolution)
    common = dict(
        config_hash=config.hash,
        scheme=config.scheme.label,
        test_function=f0.name,
        design=q0.name,
        beta=cell.beta,
        p=cell.p,
        resolution=cell.resolution,
        sigma=sigma,
        h=plan.h,
        predicted_exponent=predicted_frontier_exponent(config.scheme, cell.beta, cell.p),
    )
    try:
        if isinstance(plan, LocationPlan):
            report = location_approx(f0, plan, kernel, bandwidth=f0.bandwidth, verbose=verbose)
        else:
            report = hybrid_approx(f0, plan, kernel, bandwidth=f0.bandwidth, verbose=verbose)
    except (QuadratureError, WindowError) as error:
        row = SweepRow(
            **common,
            lambda_size=0,
            sup_error_core=math.nan,
            sup_error_global=math.nan,
            untruncated_error=math.nan,
            design_l2=math.nan,
            design_bound=math.nan,
            status=f"{type(error).__name__}: {error}",
        )
        return row, time.perf_counter() - start

    xs = q0.sample(rng, config.design_samples)
    design_l2 = float(np.mean((report.mixture(xs) - f0(xs)) ** 2))
    row = SweepRow(
        **common,
        lambda_size=report.lambda_size,
        sup_error_core=report.sup_error_core,
        sup_error_global=report.sup_error_global,
        untruncated_error=report.untruncated_error,
        design_l2=design_l2,
        design_bound=_design_bound(report, q0),
        status="ok",
    )
    return row, time.perf_counter() - start


@dataclass(frozen=True, slots=True)
class FrontierFit:
    """
    Fitted complexity-accuracy frontier of one ``(beta, p)`` group.

    :ivar scheme: Scheme label.
    :ivar beta: Hölder order.
    :ivar p: Moment index.
    :ivar points: Cells used after dropping the coarsest.
    :ivar slope: Fitted ``a`` in ``log N = c + a log(1/e)``.
    :ivar intercept: Fitted ``c``.
    :ivar predicted: Predicted ``a``.
    :ivar count_slope: Fitted slope of ``log |Lambda|`` against ``log sigma``.
    :ivar predicted_count_slope: Predicted count slope.
    :ivar error_slope: Fitted slope of ``log e`` against ``log sigma``.
    :ivar status: ``"ok"`` or ``"insufficient"`` when fewer than two cells remain.
    """

    scheme: str
    beta: float
    p: float
    points: int
    slope: float
    intercept: float
    predicted: float
    count_slope: float
    predicted_count_slope: float
    error_slope: float
    status: str

    def within(self, tol: float = FRONTIER_TOLERANCE) -> bool:
        """
        Check the fitted exponent against the prediction.

        Location slopes must match within ``tol``; hybrid predictions are upper bounds,
        so hybrid slopes must not exceed them by more than ``tol``.

        :param tol: Tolerance.

        :return: The verdict, ``False`` for insufficient fits.
        """
        if self.status != "ok":
            return False
        if self.scheme == MixtureKind.HYBRID.label:
            return self.slope <= self.predicted + tol
        return abs(self.slope - self.predicted) <= tol

    def components(self, error: float) -> float:
        """
        Get the fitted component count at a core error.

        :param error: Core error, positive.

        :return: ``exp(c) (1/e)^a``.
        """
        return math.exp(self.intercept + self.slope * math.log(1.0 / error))

    def to_dict(self) -> dict:
        """Get a JSON-ready mapping of the fit."""
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        out["within_tolerance"] = self.within()
        return out


def fit_frontier(rows: list[SweepRow], drop_first: int = DROP_COARSEST) -> FrontierFit:
    """
    Fit the frontier of one ``(beta, p)`` group.

    Cells are ordered from coarse to fine and failed cells are skipped before the
    ``drop_first`` coarsest are dropped.

    :param rows: Rows sharing scheme, ``beta`` and ``p``.

    :param drop_first: Number of coarsest cells to drop.

    :return: The fit.
    :raises ValueError: If the rows are empty or mix groups.

    """
    if not rows:
        raise ValueError("Cannot fit a frontier without rows")
    keys = {(r.scheme, r.beta, r.p) for r in rows}
    if len(keys) != 1:
        raise ValueError(f"Rows mix frontier groups: {sorted(keys)}")
    scheme, beta, p = keys.pop()
    usable = sorted(
        (r for r in rows if r.ok and r.lambda_size > 0 and r.sup_error_core > 0.0),
        key=lambda r: -r.sigma,
    )
    predicted = predicted_frontier_exponent(MixtureKind.from_label(scheme), beta, p)
    nan = math.nan
    if len(usable) - drop_first < 2:
        return FrontierFit(
            scheme, beta, p, max(0, len(usable) - drop_first), nan, nan, predicted,
            nan, -beta * predicted, nan, "insufficient",
        )
    sigma = [r.sigma for r in usable]
    errors = [r.sup_error_core for r in usable]
    counts = [r.lambda_size for r in usable]
    frontier = fit_loglog_slope([1.0 / e for e in errors], counts, drop_first)
    return FrontierFit(
        scheme=scheme,
        beta=beta,
        p=p,
        points=frontier.points,
        slope=frontier.slope,
        intercept=frontier.intercept,
        predicted=predicted,
        count_slope=fit_loglog_slope(sigma, counts, drop_first).slope,
        predicted_count_slope=-beta * predicted,
        error_slope=fit_loglog_slope(sigma, errors, drop_first).slope,
        status="ok",
    )


@dataclass(frozen=True, slots=True)
class FrontierComparison:
    """
    Component counts of the location and hybrid frontiers at one core error.

    :ivar error: Matched core error.
    :ivar location_components: Fitted location count.
    :ivar hybrid_components: Fitted hybrid count.
    """

    error: float
    location_components: float
    hybrid_components: float

    @property
    def hybrid_no_larger(self) -> bool:
        """Whether the hybrid scheme needs no more components."""
        return self.hybrid_components <= self.location_components


def compare_frontiers(location: FrontierFit, hybrid: FrontierFit, error: float) -> FrontierComparison:
    """
    Compare two fitted frontiers at a matched core error.

    :param location: Location fit.

    :param hybrid: Hybrid fit.

    :param error: Core error, positive.

    :return: The comparison.
    :raises ValueError: If a fit is insufficient or the error is not positive.

    """
    if location.status != "ok" or hybrid.status != "ok":
        raise ValueError("Both frontiers need a successful fit")
    if not error > 0.0:
        raise ValueError(f"error must be positive, got {error}")
    return FrontierComparison(error, location.components(error), hybrid.components(error))


@dataclass(frozen=True, slots=True)
class SweepResult:
    """
    Rows, runtimes and frontier fits of one sweep.

    :ivar config: Sweep config.
    :ivar rows: Rows sorted by cell key.
    :ivar runtimes: Seconds per row, same order.
    :ivar frontiers: One fit per ``(beta, p)`` group.
    """

    config: ExperimentConfig
    rows: tuple[SweepRow, ...]
    runtimes: tuple[float, ...]
    frontiers: tuple[FrontierFit, ...]

    @property
    def failures(self) -> int:
        """Number of failed cells."""
        return sum(not r.ok for r in self.rows)


def _cells(config: ExperimentConfig) -> list[SweepCell]:
    return sorted(
        SweepCell(beta, p, resolution)
        for beta in config.beta_grid
        for p in config.p_grid
        for resolution in config.resolution_grid
    )


def run_sweep(
    config: ExperimentConfig,
    kernel: SpectralCutoff | None = None,
    verbose: bool = False,
) -> SweepResult:
    """
    Run every cell of a config and fit the frontiers.

    Each cell draws its design sample from its own child of ``SeedSequence(config.seed)``,
    assigned in cell-key order, so the rows do not depend on the thread count.

    :param config: Sweep config.

    :param kernel: Spectral cutoff; built with defaults when omitted.

    :param verbose: Print one line per cell.

    :return: The result.
    """
    kernel = build_cutoff() if kernel is None else kernel
    q0 = design(config.design)
    cells = _cells(config)
    streams = np.random.SeedSequence(config.seed).spawn(len(cells))

    def work(index: int) -> tuple[SweepRow, float]:
        cell = cells[index]
        f0 = test_function(config.test_function, cell.beta)
        row, seconds = run_cell(config, cell, f0, q0, kernel, np.random.default_rng(streams[index]))
        if verbose:
            print(
                f"{LOG_SWEEP} harness.run_sweep() | run cell -> {row.scheme} "
                f"[beta={cell.beta:g}, p={cell.p:g}, resolution={cell.resolution:g}, status={row.status}]"
            )
        return row, seconds

    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(work, range(len(cells))))
    else:
        results = [work(i) for i in range(len(cells))]

    rows = tuple(r for r, _ in results)
    groups: dict[tuple[float, float], list[SweepRow]] = {}
    for row in rows:
        groups.setdefault((row.beta, row.p), []).append(row)
    frontiers = tuple(fit_frontier(group) for _, group in sorted(groups.items()))
    return SweepResult(config, rows, tuple(s for _, s in results), frontiers)


def write_sweep(result: SweepResult, out_dir: Path | str, stem: str = "sweep") -> list[Path]:
    """
    Write the rows, the runtimes and the frontier fits.

    Rows and fits are deterministic for a given config; runtimes go to their own file.

    :param result: Sweep result.

    :param out_dir: Output directory.

    :param stem: File name stem.

    :return: Paths written.
    """
    out = Path(out_dir)
    rows_path = write_csv(out / f"{stem}.csv", SWEEP_COLUMNS, (astuple(r) for r in result.rows))
    timing_path = write_csv(
        out / f"{stem}_timings.csv",
        ("config_hash", "beta", "p", "resolution", "runtime_s"),
        (
            (r.config_hash, r.beta, r.p, r.resolution, seconds)
            for r, seconds in zip(result.rows, result.runtimes, strict=True)
        ),
    )
    frontier_path = write_json(
        out / f"{stem}_frontier.json",
        {
            "config": result.config.result_dict(),
            "config_hash": result.config.hash,
            "failures": result.failures,
            "frontiers": [f.to_dict() for f in result.frontiers],
        },
    )
    return [rows_path, timing_path, frontier_path]
