"""Symmetric Gamma scalars and symmetric Gamma random measures."""

__docformat__ = "restructuredtext"
__all__ = [
    "SignedAtomMeasure",
    "invert_levy_tail",
    "jump_count_mean",
    "lump_gamma_params",
    "sample_jump_magnitudes",
    "sample_sga",
    "sample_sga_process",
    "sga_small_ball_bound",
    "simulate_total_variation",
]

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from mixrates._enums import SmallJumpPolicy
from mixrates.custom_types import FloatArray, SiteSampler
from mixrates.mixture import FiniteGaussMixture

_MAGNITUDE_CAP = 50.0
"""Upper end of the Newton bracket; ``E1(50)`` is below any reachable target."""
_NEWTON_TOL = 1e-12
_NEWTON_MAX_ITER = 100
_TRIAL_CHUNK = 10_000


@dataclass(frozen=True, slots=True, eq=False)
class SignedAtomMeasure:
    """
    Finite realization of a random signed measure ``sum_i u_i delta_{site_i}``.

    Sites are locations, or ``(sigma, mu)`` pairs when :attr:`scales` is set.

    :ivar masses: Signed masses ``u_i``.
    :ivar locations: Location coordinate of every site.
    :ivar truncation: Smallest simulated jump magnitude.
    :ivar scales: Scale coordinate of every site, or ``None`` for location sites.
    :ivar bias_bound: Expected total variation carried by jumps that were not simulated.
    """

    masses: FloatArray = field(repr=False)
    locations: FloatArray = field(repr=False)
    truncation: float
    scales: FloatArray | None = field(default=None, repr=False)
    bias_bound: float = 0.0

    def __post_init__(self):
        """Coerce to float arrays and validate."""
        object.__setattr__(self, "masses", np.asarray(self.masses, dtype=float).ravel())
        object.__setattr__(self, "locations", np.asarray(self.locations, dtype=float).ravel())
        if self.scales is not None:
            object.__setattr__(self, "scales", np.asarray(self.scales, dtype=float).ravel())
            if self.scales.size != self.masses.size:
                raise ValueError(
                    f"Scale column has {self.scales.size} entries for {self.masses.size} masses"
                )
            if self.scales.size and not np.all(self.scales > 0.0):
                raise ValueError("Site scales must be positive")
        if self.locations.size != self.masses.size:
            raise ValueError(
                f"Location column has {self.locations.size} entries for {self.masses.size} masses"
            )
        if not self.truncation > 0.0:
            raise ValueError(f"truncation must be positive, got {self.truncation}")
        if not np.all(np.isfinite(self.masses)):
            raise ValueError("Masses must be finite")

    @classmethod
    def empty(cls, truncation: float, with_scales: bool = False) -> "SignedAtomMeasure":
        """
        Measure without atoms.

        :param truncation: Recorded jump floor.

        :param with_scales: Whether sites are ``(sigma, mu)`` pairs.

        :return: The zero measure.
        """
        return cls(np.empty(0), np.empty(0), truncation, np.empty(0) if with_scales else None)

    @property
    def has_scales(self) -> bool:
        """
        Whether sites carry a scale coordinate.

        :return: ``True`` for location-scale sites.
        """
        return self.scales is not None

    @property
    def total_variation(self) -> float:
        """
        Get ``|M| = sum_i |u_i|``.

        :return: Total variation of the realization.
        """
        return float(np.sum(np.abs(self.masses)))

    def __len__(self) -> int:
        """Return the number of atoms."""
        return int(self.masses.size)

    def __add__(self, other: "SignedAtomMeasure") -> "SignedAtomMeasure":
        """Superpose two realizations; the truncation is the smaller one."""
        if self.has_scales != other.has_scales:
            raise ValueError("Cannot superpose location sites with location-scale sites")
        scales = None
        if self.scales is not None and other.scales is not None:
            scales = np.concatenate([self.scales, other.scales])
        return SignedAtomMeasure(
            np.concatenate([self.masses, other.masses]),
            np.concatenate([self.locations, other.locations]),
            min(self.truncation, other.truncation),
            scales,
            self.bias_bound + other.bias_bound,
        )

    def cell_mass(self, lower: float, upper: float) -> float:
        """
        Get ``M(B)`` for the location cell ``B = (lower, upper]``.

        :param lower: Left end, excluded.

        :param upper: Right end, included.

        :return: Signed mass of the cell.
        """
        inside = (self.locations > lower) & (self.locations <= upper)
        return float(np.sum(self.masses[inside]))

    def with_scale(self, sigma: float) -> "SignedAtomMeasure":
        """
        Attach one shared scale to every site.

        :param sigma: Positive scale.

        :return: A location-scale realization with constant scales.
        :raises ValueError: If the sites already carry scales.

        """
        if self.has_scales:
            raise ValueError("Sites already carry scales")
        return SignedAtomMeasure(
            self.masses,
            self.locations,
            self.truncation,
            np.full(self.masses.size, float(sigma)),
            self.bias_bound,
        )

    def to_mixture(self, sigma: float | None = None) -> FiniteGaussMixture:
        """
        The random function ``x -> sum_i u_i phi((x - mu_i) / sigma_i)``.

        :param sigma: Shared scale for location sites; ignored when sites carry scales.

        :return: The mixture.
        :raises ValueError: If sites carry no scale and ``sigma`` is not given.

        """
        if self.scales is not None:
            return FiniteGaussMixture(self.masses, self.locations, self.scales)
        if sigma is None:
            raise ValueError("Location sites need a shared sigma to form a mixture")
        return FiniteGaussMixture(self.masses, self.locations, np.full(self.masses.size, sigma))

    def rows(self) -> FloatArray:
        """
        Get the ``(mass, sigma, mu)`` table used for CSV output.

        :return: Array of shape ``(n, 3)``; sigma is NaN for location sites.
        """
        scales = self.scales if self.scales is not None else np.full(self.masses.size, np.nan)
        return np.column_stack([self.masses, scales, self.locations])


def sample_sga(
    alpha: float, rng: np.random.Generator, size: int | None = None
) -> float | FloatArray:
    """
    Draw from ``SGa(alpha)``, the difference of two independent ``Gamma(alpha, 1)``.

    :param alpha: Positive shape.

    :param rng: Random stream.

    :param size: Number of draws; ``None`` returns one float.

    :return: One draw or an array of draws.
    :raises ValueError: If ``alpha`` is not positive.

    """
    if alpha <= 0.0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    draws = rng.gamma(alpha, 1.0, size) - rng.gamma(alpha, 1.0, size)
    if size is None:
        return float(draws)
    return np.asarray(draws, dtype=float)


def sga_small_ball_bound(alpha: float, x: float, delta: float) -> float:
    """
    Lower bound on ``P(|X - x| <= delta)`` for ``X ~ SGa(alpha)``.

    The bound ``delta exp(-2|x|) / (3 e Gamma(alpha))`` holds for ``alpha <= 1`` and
    ``delta <= 1/2``.

    :param alpha: Shape in ``(0, 1]``.

    :param x: Centre of the ball.

    :param delta: Radius in ``(0, 1/2]``.

    :return: The bound.
    :raises ValueError: If ``alpha`` or ``delta`` is out of range.

    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if not 0.0 < delta <= 0.5:
        raise ValueError(f"delta must lie in (0, 1/2], got {delta}")
    return delta * math.exp(-2.0 * abs(x)) / (3.0 * math.e * special.gamma(alpha))


def jump_count_mean(alpha_bar: float, jump_floor: float) -> float:
    """
    Expected number of jumps with ``|u| >= jump_floor``: ``2 alpha_bar E1(jump_floor)``.

    :param alpha_bar: Total mass of the base measure.

    :param jump_floor: Positive floor.

    :return: The Poisson intensity.
    """
    return 2.0 * alpha_bar * float(special.exp1(jump_floor))


def invert_levy_tail(levels: FloatArray, jump_floor: float) -> FloatArray:
    """
    Solve ``E1(u) = v E1(jump_floor)`` for ``u >= jump_floor``, elementwise in ``v``.

    Safeguarded Newton on ``log E1`` inside the bracket ``[jump_floor, 50]``; steps that
    leave the bracket are replaced by bisection.

    :param levels: Values ``v`` in ``(0, 1]``.

    :param jump_floor: Floor in ``(0, 1)``.

    :return: Magnitudes ``u``.
    """
    v = np.asarray(levels, dtype=float)
    log_target = np.log(v) + math.log(special.exp1(jump_floor))
    lo = np.full(v.shape, jump_floor)
    hi = np.full(v.shape, _MAGNITUDE_CAP)
    u = np.clip(jump_floor - np.log(v), lo, hi)
    active = np.ones(v.shape, dtype=bool)
    for _ in range(_NEWTON_MAX_ITER):
        if not active.any():
            break
        ua = u[active]
        e1 = special.exp1(ua)
        g = np.log(e1) - log_target[active]
        lo[active] = np.where(g > 0.0, ua, lo[active])
        hi[active] = np.where(g < 0.0, ua, hi[active])
        step = g * ua * e1 * np.exp(ua)
        proposal = ua + step
        outside = (proposal <= lo[active]) | (proposal >= hi[active])
        proposal = np.where(outside, 0.5 * (lo[active] + hi[active]), proposal)
        done = (g == 0.0) | (np.abs(proposal - ua) <= _NEWTON_TOL * np.maximum(1.0, ua))
        u[active] = np.where(g == 0.0, ua, proposal)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    return u


def sample_jump_magnitudes(count: int, jump_floor: float, rng: np.random.Generator) -> FloatArray:
    """
    Draw ``count`` iid jump magnitudes with density ``exp(-u) / (u E1(floor))`` on ``u >= floor``.

    :param count: Number of magnitudes.

    :param jump_floor: Floor in ``(0, 1)``.

    :param rng: Random stream.

    :return: Magnitudes, all at least ``jump_floor``.
    """
    levels = 1.0 - rng.random(count)
    return invert_levy_tail(levels, jump_floor)


def lump_gamma_params(alpha_bar: float, jump_floor: float) -> tuple[float, float]:
    """
    Shape and scale of the Gamma law matching the sum of one sign's jumps below the floor.

    The sum has mean ``alpha_bar (1 - e^-f)`` and variance ``alpha_bar (1 - (1 + f) e^-f)``.

    :param alpha_bar: Positive total mass of the base measure.

    :param jump_floor: Floor ``f``.

    :return: ``(shape, scale)``.
    """
    mean = alpha_bar * -math.expm1(-jump_floor)
    var = alpha_bar * (1.0 - (1.0 + jump_floor) * math.exp(-jump_floor))
    return mean * mean / var, var / mean


def _check_floor(jump_floor: float) -> None:
    if not 0.0 < jump_floor < 1.0:
        raise ValueError(f"jump_floor must lie in (0, 1), got {jump_floor}")


def sample_sga_process(
    alpha_bar: float,
    base: SiteSampler,
    jump_floor: float,
    rng: np.random.Generator,
    policy: SmallJumpPolicy = SmallJumpPolicy.DISCARD,
) -> SignedAtomMeasure:
    """
    Draw a symmetric Gamma process with base measure ``alpha_bar * G``.

    Jumps with ``|u| >= jump_floor`` are exact: a Poisson number with mean
    ``2 alpha_bar E1(jump_floor)``, inverse-Lévy magnitudes, fair random signs and iid
    sites from ``base``. Smaller jumps are dropped (``DISCARD``, expected total
    variation at most ``2 alpha_bar jump_floor``) or replaced by one atom whose positive
    and negative parts are moment-matched Gamma variables (``LUMP``).

    :param alpha_bar: Total mass of the base measure; zero gives the empty measure.

    :param base: Site sampler for ``G``.

    :param jump_floor: Floor in ``(0, 1)``.

    :param rng: Random stream.

    :param policy: Treatment of the jumps below the floor.

    :return: The realization.
    :raises ValueError: If ``alpha_bar`` is negative or the floor is out of range.

    """
    _check_floor(jump_floor)
    if alpha_bar < 0.0:
        raise ValueError(f"alpha_bar must be nonnegative, got {alpha_bar}")
    if alpha_bar == 0.0:
        return SignedAtomMeasure.empty(jump_floor, np.asarray(base(rng, 0)).ndim == 2)

    count = int(rng.poisson(jump_count_mean(alpha_bar, jump_floor)))
    masses = sample_jump_magnitudes(count, jump_floor, rng)
    masses *= np.where(rng.random(count) < 0.5, -1.0, 1.0)
    bias = 2.0 * alpha_bar * jump_floor
    if policy is SmallJumpPolicy.LUMP:
        shape, scale = lump_gamma_params(alpha_bar, jump_floor)
        lumped = rng.gamma(shape, scale) - rng.gamma(shape, scale)
        masses = np.append(masses, lumped)
        count += 1
        bias = 0.0
    sites = np.asarray(base(rng, count), dtype=float)
    if sites.ndim == 2:
        return SignedAtomMeasure(masses, sites[:, 1], jump_floor, sites[:, 0], bias)
    return SignedAtomMeasure(masses, sites, jump_floor, None, bias)


def simulate_total_variation(
    alpha_bar: float,
    jump_floor: float,
    trials: int,
    rng: np.random.Generator,
    policy: SmallJumpPolicy = SmallJumpPolicy.DISCARD,
) -> FloatArray:
    """
    Draw ``trials`` independent copies of the total variation ``|M|``.

    Sites play no role in ``|M|`` and are not drawn. Under ``LUMP`` the two
    moment-matched small-jump parts are added to the simulated jumps.

    :param alpha_bar: Total mass of the base measure.

    :param jump_floor: Floor in ``(0, 1)``.

    :param trials: Number of copies.

    :param rng: Random stream.

    :param policy: Treatment of the jumps below the floor.

    :return: Array of ``trials`` total variations.
    """
    _check_floor(jump_floor)
    rate = jump_count_mean(alpha_bar, jump_floor)
    out = np.empty(trials)
    for start in range(0, trials, _TRIAL_CHUNK):
        size = min(_TRIAL_CHUNK, trials - start)
        counts = rng.poisson(rate, size)
        magnitudes = sample_jump_magnitudes(int(counts.sum()), jump_floor, rng)
        owners = np.repeat(np.arange(size), counts)
        out[start : start + size] = np.bincount(owners, weights=magnitudes, minlength=size)
    if policy is SmallJumpPolicy.LUMP and alpha_bar > 0.0:
        shape, scale = lump_gamma_params(alpha_bar, jump_floor)
        out += rng.gamma(shape, scale, trials) + rng.gamma(shape, scale, trials)
    return out
