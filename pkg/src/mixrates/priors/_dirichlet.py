"""Dirichlet-process scale priors: stick breaking, tail events and the dyadic-ladder bound."""

__docformat__ = "restructuredtext"
__all__ = [
    "DiscreteScaleMeasure",
    "MarkovCheck",
    "OmegaGrowth",
    "dp_markov_check",
    "dp_omega_lower_bound",
    "fit_omega_growth",
    "omega_cells",
    "sample_dp",
    "sample_dp_batch",
]

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from mixrates.custom_types import FloatArray
from mixrates.priors._scale import ScaleDistribution, ScalePriorSpec

_STICK_BLOCK = 32
_BATCH_CHUNK = 2_000
_DEFAULT_STICK_TOL = 1e-10


def _law_of(base: ScalePriorSpec | ScaleDistribution) -> ScaleDistribution:
    return base.base if isinstance(base, ScalePriorSpec) else base


def _concentration(alpha_sigma: float) -> float:
    if not alpha_sigma > 0.0:
        raise ValueError(f"alpha_sigma must be positive, got {alpha_sigma}")
    return float(alpha_sigma)


@dataclass(frozen=True, slots=True, eq=False)
class DiscreteScaleMeasure:
    """
    Discrete probability measure ``sum_k w_k delta_{s_k}`` on ``(0, inf)``.

    :ivar weights: Nonnegative weights summing to one.
    :ivar atoms: Positive support points.
    :ivar residual: Stick mass left after the last break, folded into the last weight.
    """

    weights: FloatArray = field(repr=False)
    atoms: FloatArray = field(repr=False)
    residual: float = 0.0

    def __post_init__(self):
        """Validate the measure."""
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float).ravel())
        object.__setattr__(self, "atoms", np.asarray(self.atoms, dtype=float).ravel())
        if self.weights.size != self.atoms.size or self.weights.size == 0:
            raise ValueError(
                f"Need as many weights as atoms, at least one; got {self.weights.size} and {self.atoms.size}"
            )
        if np.any(self.weights < 0.0) or not math.isclose(float(self.weights.sum()), 1.0, abs_tol=1e-9):
            raise ValueError("Weights must be nonnegative and sum to one")

    def __len__(self) -> int:
        """Return the number of atoms."""
        return int(self.atoms.size)

    def mass(self, lower: float, upper: float) -> float:
        """
        Get ``P([lower, upper])``.

        :param lower: Left end.

        :param upper: Right end, possibly ``inf``.

        :return: Cell probability.
        """
        inside = (self.atoms >= lower) & (self.atoms <= upper)
        return float(np.sum(self.weights[inside]))

    def sample(self, rng: np.random.Generator, size: int) -> FloatArray:
        """
        Draw scales from the measure.

        :param rng: Random stream.

        :param size: Number of draws.

        :return: Draws, each one of the atoms.
        """
        return self.atoms[rng.choice(self.atoms.size, size=size, p=self.weights)]


def sample_dp(
    alpha_sigma: float,
    base: ScalePriorSpec | ScaleDistribution,
    rng: np.random.Generator,
    truncation: int | None = None,
    tol: float = _DEFAULT_STICK_TOL,
) -> DiscreteScaleMeasure:
    """
    Draw ``P ~ DP(alpha_sigma G)`` by stick breaking.

    Sticks ``V_k ~ Beta(1, alpha_sigma)`` are broken until the remaining stick is at most
    ``tol``, or exactly ``truncation`` times when given. The remainder is added to the
    last weight so the realization is a probability measure.

    :param alpha_sigma: Concentration.

    :param base: Base law ``G``, or a spec whose inverse-Gaussian law is used.

    :param rng: Random stream.

    :param truncation: Fixed number of sticks, or ``None`` to stop on ``tol``.

    :param tol: Largest admissible remaining stick.

    :return: The realization.
    :raises ValueError: If ``truncation`` sticks leave more than ``tol`` unassigned.

    """
    alpha = _concentration(alpha_sigma)
    law = _law_of(base)
    if truncation is not None:
        if truncation < 1:
            raise ValueError(f"truncation must be at least 1, got {truncation}")
        sticks = rng.beta(1.0, alpha, truncation)
    else:
        blocks = []
        log_left = 0.0
        while log_left > math.log(tol):
            block = rng.beta(1.0, alpha, _STICK_BLOCK)
            blocks.append(block)
            log_left += float(np.sum(np.log1p(-block)))
        sticks = np.concatenate(blocks)
    left = np.concatenate([[1.0], np.cumprod(1.0 - sticks)])
    residual = float(left[-1])
    if residual > tol:
        raise ValueError(
            f"{sticks.size} sticks leave mass {residual:.3e} > {tol:.1e}; raise the truncation"
        )
    weights = sticks * left[:-1]
    weights[-1] += residual
    atoms = law.sample(rng, sticks.size)
    return DiscreteScaleMeasure(weights, atoms, residual)


def sample_dp_batch(
    alpha_sigma: float,
    base: ScalePriorSpec | ScaleDistribution,
    cells: Sequence[tuple[float, float]],
    trials: int,
    rng: np.random.Generator,
    tol: float = _DEFAULT_STICK_TOL,
) -> FloatArray:
    """
    Cell probabilities ``P([lo, hi])`` of many independent Dirichlet-process draws.

    Sticks are broken in blocks for a whole chunk of trials at once until every trial's
    remaining stick is at most ``tol``; that remainder is left unassigned.

    :param alpha_sigma: Concentration.

    :param base: Base law, or a spec whose inverse-Gaussian law is used.

    :param cells: Closed cells ``(lo, hi)``; ``hi`` may be ``inf``.

    :param trials: Number of independent draws.

    :param rng: Random stream.

    :param tol: Largest unassigned stick per trial.

    :return: Array of shape ``(trials, len(cells))``.
    """
    alpha = _concentration(alpha_sigma)
    law = _law_of(base)
    bounds = np.asarray(cells, dtype=float).reshape(-1, 2)
    out = np.zeros((trials, bounds.shape[0]))
    for start in range(0, trials, _BATCH_CHUNK):
        size = min(_BATCH_CHUNK, trials - start)
        left = np.ones(size)
        acc = np.zeros((size, bounds.shape[0]))
        while left.max() > tol:
            sticks = rng.beta(1.0, alpha, (size, _STICK_BLOCK))
            before = left[:, None] * np.cumprod(
                np.concatenate([np.ones((size, 1)), 1.0 - sticks[:, :-1]], axis=1), axis=1
            )
            weights = sticks * before
            left = before[:, -1] * (1.0 - sticks[:, -1])
            atoms = law.sample(rng, (size, _STICK_BLOCK))
            for c, (lo, hi) in enumerate(bounds):
                acc[:, c] += np.sum(weights * ((atoms >= lo) & (atoms <= hi)), axis=1)
        out[start : start + size] = acc
    return out


@dataclass(frozen=True, slots=True)
class MarkovCheck:
    """
    One Markov-inequality check of a Dirichlet-process tail event.

    :ivar event: ``"upper"`` for ``P(sigma > x) >= exp(-a1 x / 2)``, ``"lower"`` for
        ``P(sigma < 1/x) >= exp(-a2 x / 2)``.
    :ivar x: Tail position.
    :ivar threshold: Probability threshold of the event.
    :ivar frequency: Empirical frequency of the event.
    :ivar bound: Markov bound ``G(cell) / threshold``.
    :ivar stderr: Binomial standard error of the frequency.
    """

    event: str
    x: float
    threshold: float
    frequency: float
    bound: float
    stderr: float

    @property
    def passed(self) -> bool:
        """
        Whether the frequency is within three standard errors below the bound.

        :return: ``frequency <= bound + 3 stderr``.
        """
        return self.frequency <= self.bound + 3.0 * self.stderr


def dp_markov_check(
    spec: ScalePriorSpec,
    xs: Sequence[float],
    trials: int,
    rng: np.random.Generator,
) -> list[MarkovCheck]:
    """
    Compare the frequency of the upper and lower tail events against their Markov bounds.

    :param spec: Dirichlet-process scale prior.

    :param xs: Tail positions, at least 1.

    :param trials: Number of Dirichlet-process draws.

    :param rng: Random stream.

    :return: One upper and one lower check per position, in order of ``xs``.
    :raises ValueError: If ``spec`` is not a Dirichlet process.

    """
    if spec.alpha_sigma is None:
        raise ValueError("Markov checks need a Dirichlet-process scale prior")
    law = spec.base
    cells = []
    for x in xs:
        cells.extend([(float(x), math.inf), (0.0, 1.0 / float(x))])
    masses = sample_dp_batch(spec.alpha_sigma, law, cells, trials, rng)
    checks = []
    for i, x in enumerate(xs):
        for offset, event, rate, base_mass in (
            (0, "upper", spec.a1, law.mass(float(x), math.inf)),
            (1, "lower", spec.a2, law.mass(0.0, 1.0 / float(x))),
        ):
            threshold = math.exp(-rate * float(x) / 2.0)
            freq = float(np.mean(masses[:, 2 * i + offset] >= threshold))
            checks.append(
                MarkovCheck(
                    event=event,
                    x=float(x),
                    threshold=threshold,
                    frequency=freq,
                    bound=base_mass / threshold,
                    stderr=math.sqrt(freq * (1.0 - freq) / trials),
                )
            )
    return checks


def omega_cells(J: int, r: float) -> list[tuple[float, float]]:
    """
    Get the dyadic cells ``[2^-j, 2^-j (1 + 2^(-J r))]`` for ``j = 0, ..., J``.

    :param J: Finest level.

    :param r: Relative-width exponent, at least 1.

    :return: The ``J + 1`` cells, disjoint for ``r >= 1``.
    """
    width = 2.0 ** (-J * r)
    return [(2.0**-j, 2.0**-j * (1.0 + width)) for j in range(J + 1)]


def dp_omega_lower_bound(
    J: int,
    r: float,
    alpha_sigma: float,
    base: ScalePriorSpec | ScaleDistribution,
) -> float:
    """
    Log of the analytic lower bound on ``Pi(P[2^-j, 2^-j (1 + 2^(-J r))] >= 2^-J for all j <= J)``.

    The complement of the dyadic cells is split into ``M = max(1, ceil(alpha_sigma G^c))``
    pieces of equal mass, and the bound is
    ``Gamma(alpha_sigma) alpha_sigma^(J+M+1) 2^(-J(J+M)) prod_j G(V_j)`` over all
    ``J + M + 1`` cells.

    :param J: Finest level, at least 2.

    :param r: Relative-width exponent, at least 1.

    :param alpha_sigma: Concentration.

    :param base: Base law, or a spec whose inverse-Gaussian law is used.

    :return: The log bound.
    :raises ValueError: If ``J < 2``, ``r < 1`` or a dyadic cell has zero base mass.

    """
    if J < 2:
        raise ValueError(f"J must be at least 2, got {J}")
    if r < 1.0:
        raise ValueError(f"r must be at least 1, got {r}")
    alpha = _concentration(alpha_sigma)
    law = _law_of(base)
    log_cells = []
    for j, (lo, hi) in enumerate(omega_cells(J, r)):
        value = law.log_mass(lo, hi)
        if not math.isfinite(value):
            raise ValueError(f"Base measure puts no mass on the level-{j} cell [{lo:.3e}, {hi:.3e}]")
        log_cells.append(value)
    outside = max(0.0, 1.0 - float(np.sum(np.exp(log_cells))))
    M = max(1, math.ceil(alpha * outside))
    log_outside = M * math.log(outside / M) if outside > 0.0 else 0.0
    return (
        float(special.gammaln(alpha))
        + (J + M + 1) * math.log(alpha)
        - J * (J + M) * math.log(2.0)
        + math.fsum(log_cells)
        + log_outside
    )


@dataclass(frozen=True, slots=True)
class OmegaGrowth:
    """
    Least-squares model ``-log bound = exponential 2^J + quadratic J^2 + intercept``.

    :ivar exponential: Coefficient of ``2^J``.
    :ivar quadratic: Coefficient of ``J^2``.
    :ivar intercept: Constant term.
    :ivar levels: Levels used in the fit.
    """

    exponential: float
    quadratic: float
    intercept: float
    levels: tuple[int, ...]

    @property
    def quadratic_subdominant(self) -> bool:
        """
        Whether the ``J^2`` term stays below the ``2^J`` term at the finest fitted level.

        :return: ``True`` when ``|quadratic| J^2 < exponential 2^J``.
        """
        J = max(self.levels)
        return abs(self.quadratic) * J * J < self.exponential * 2.0**J


def fit_omega_growth(
    levels: Sequence[int],
    r: float,
    alpha_sigma: float,
    base: ScalePriorSpec | ScaleDistribution,
) -> OmegaGrowth:
    """
    Fit the growth of ``-log`` :func:`dp_omega_lower_bound` in ``J``.

    :param levels: At least three levels.

    :param r: Relative-width exponent.

    :param alpha_sigma: Concentration.

    :param base: Base law, or a spec whose inverse-Gaussian law is used.

    :return: The fitted model.
    :raises ValueError: If fewer than three levels are given.

    """
    Js = np.asarray(sorted(set(levels)), dtype=float)
    if Js.size < 3:
        raise ValueError(f"Need at least three levels, got {Js.size}")
    y = np.array([-dp_omega_lower_bound(int(J), r, alpha_sigma, base) for J in Js])
    design = np.column_stack([2.0**Js, Js**2, np.ones_like(Js)])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return OmegaGrowth(
        exponential=float(coef[0]),
        quadratic=float(coef[1]),
        intercept=float(coef[2]),
        levels=tuple(int(J) for J in Js),
    )
