"""Explicit net over the sieve: cardinality, rounding of members and the covering check."""

__docformat__ = "restructuredtext"
__all__ = [
    "CoveringCheck",
    "NetCardinality",
    "RoundingBudget",
    "covariate_window",
    "net_constant",
    "net_covering_check",
    "net_log_cardinality",
    "random_sieve_member",
    "round_to_net",
]

import math
from dataclasses import dataclass

import numpy as np

from mixrates._constants import LOG_CHECK
from mixrates._enums import MixtureKind
from mixrates.custom_types import FloatArray
from mixrates.mixture import FiniteGaussMixture
from mixrates.priors import SignedAtomMeasure
from mixrates.sieve._membership import atom_columns, sieve_membership
from mixrates.sieve._spec import NetSpec, SieveSpec

_COVERING_FACTOR = 8.0
_TERM_FACTOR = 2.0
_ENTROPY_RADIUS_DIVISOR = 18.0
_LATTICE_SLACK = 1e-12
_MAX_SMALL_ATOMS = 40


def net_constant(b1: float = 1.0, b2: float = 1.0) -> float:
    """
    Get ``C = (11/2 + 2/b1 + 2/b2) / 64`` of the entropy bound ``C H n epsilon^2``.

    :param b1: Upper-tail exponent of the scale prior.

    :param b2: Lower-tail exponent of the scale prior.

    :return: The constant.
    """
    return (5.5 + 2.0 / b1 + 2.0 / b2) / 64.0


def covariate_window(covariates: FloatArray, radius: float) -> FloatArray:
    """
    Merge the intervals ``[x_i - radius, x_i + radius]`` into disjoint sorted intervals.

    :param covariates: Nonempty covariates.

    :param radius: Half width.

    :return: Array of shape ``(k, 2)``.
    :raises ValueError: If there are no covariates.

    """
    xs = np.sort(np.asarray(covariates, dtype=float).ravel())
    if xs.size == 0:
        raise ValueError("Need at least one covariate")
    merged = [[xs[0] - radius, xs[0] + radius]]
    for x in xs[1:]:
        if x - radius <= merged[-1][1]:
            merged[-1][1] = x + radius
        else:
            merged.append([x - radius, x + radius])
    return np.asarray(merged)


def _in_window(points: FloatArray, window: FloatArray) -> FloatArray:
    idx = np.searchsorted(window[:, 0], points, side="right") - 1
    safe = np.clip(idx, 0, window.shape[0] - 1)
    return (idx >= 0) & (points <= window[safe, 1])


def _lattice_points(window: FloatArray, step: float) -> int:
    counts = np.floor(window[:, 1] / step) - np.ceil(window[:, 0] / step) + 1.0
    return int(np.sum(np.maximum(counts, 0.0)))


def _scale_index_range(spec: SieveSpec, step: float) -> tuple[int, int]:
    # strictly above the lower end so snapped scales stay inside the sieve
    return math.floor(spec.scale_lower / step) + 1, math.floor(spec.scale_upper / step)


@dataclass(frozen=True, slots=True)
class NetCardinality:
    """
    Size of the explicit net.

    :ivar log_count: Log of the explicit count of net elements.
    :ivar proof_bound: Log count bound with ``|R_n| <= n^(4 + 1/b1 + 1/b2)``.
    :ivar constant: ``C`` of the headline bound.
    :ivar bound: Headline bound ``C H n epsilon^2``.
    :ivar log_count_eps18: Log count of the net with every lattice step divided by 18.
    :ivar max_atoms: Largest number of atoms of a net element.
    :ivar weight_values: Number of lattice weights ``|u| <= n``.
    :ivar location_points: Number of lattice locations in the covariate window.
    :ivar scale_points: Number of lattice scales in the range.
    """

    log_count: float
    proof_bound: float
    constant: float
    bound: float
    log_count_eps18: float
    max_atoms: int
    weight_values: int
    location_points: int
    scale_points: int

    def to_dict(self) -> dict:
        """
        Convert to plain types for JSON.

        :return: Field dictionary.
        """
        return {name: getattr(self, name) for name in self.__slots__}


def _explicit_log_count(spec: SieveSpec, net: NetSpec, window: FloatArray) -> tuple[float, int, int, int]:
    weights = 2 * math.floor(net.weight_cap / net.weight_step * (1.0 + _LATTICE_SLACK)) + 1
    locations = _lattice_points(window, net.location_step)
    k_lo, k_hi = _scale_index_range(spec, net.scale_step)
    scales = max(k_hi - k_lo + 1, 1)
    per_atom = math.log(weights) + math.log(max(locations, 1))
    if spec.kind is MixtureKind.LOCATION:
        log_count = spec.max_atoms * float(np.logaddexp(per_atom, 0.0)) + math.log(scales)
    else:
        log_count = spec.max_atoms * float(np.logaddexp(per_atom + math.log(scales), 0.0))
    return log_count, weights, locations, scales


def net_log_cardinality(spec: SieveSpec, covariates: FloatArray) -> NetCardinality:
    """
    Count the explicit net over ``F_n(H, epsilon)`` built on the given covariates.

    Net elements carry at most ``floor(H n epsilon^2 / log n)`` atoms with weights on the
    lattice ``n^(-3/2) H^-1 Z`` capped at ``n``, locations on ``n^(-3/2 - 1/b2) Z`` inside
    the covariate window and scales on the same lattice inside the scale range; the
    location sieve shares one scale, the location-scale sieve picks one per atom.

    :param spec: Sieve.

    :param covariates: Covariates defining ``d_n``.

    :return: The explicit count, the proof's bound and the headline bound.
    """
    net = NetSpec.from_sieve(spec)
    window = covariate_window(covariates, net.radius)
    log_count, weights, locations, scales = _explicit_log_count(spec, net, window)
    fine = NetSpec.from_sieve(spec, refine=_ENTROPY_RADIUS_DIVISOR)
    log_count_fine, *_ = _explicit_log_count(spec, fine, covariate_window(covariates, fine.radius))

    log_n = math.log(spec.n)
    per_atom_power = 2.5 + 4.0 + 1.0 / spec.b1 + 1.0 / spec.b2
    scale_power = 1.0 / spec.b1 + 1.5 + 1.0 / spec.b2
    if spec.kind is MixtureKind.LOCATION:
        proof_bound = spec.max_atoms * per_atom_power * log_n + scale_power * log_n
    else:
        proof_bound = spec.max_atoms * (per_atom_power + scale_power) * log_n
    constant = net_constant(spec.b1, spec.b2)
    return NetCardinality(
        log_count=log_count,
        proof_bound=proof_bound,
        constant=constant,
        bound=constant * spec.H * spec.n * spec.epsilon**2,
        log_count_eps18=log_count_fine,
        max_atoms=spec.max_atoms,
        weight_values=weights,
        location_points=locations,
        scale_points=scales,
    )


@dataclass(frozen=True, slots=True)
class RoundingBudget:
    """
    Sup over the covariates of each part of ``|f - m|`` after rounding ``f`` to the net.

    :ivar far: Big atoms located outside the covariate window, dropped.
    :ivar small: Atoms with ``|u| <= 1/n``, dropped.
    :ivar scale_tail: Big atoms with scale outside the range, dropped.
    :ivar snap: Kept atoms, from moving ``(mu, sigma)`` to the lattice.
    :ivar quantization: Kept atoms, from rounding ``u`` to the lattice.
    :ivar distance: Empirical ``L^2`` distance ``d_n(f, m)``.
    """

    far: float
    small: float
    scale_tail: float
    snap: float
    quantization: float
    distance: float

    @property
    def terms(self) -> dict[str, float]:
        """
        Get the error terms by name.

        :return: Mapping from term name to its sup.
        """
        return {
            "far": self.far,
            "small": self.small,
            "scale_tail": self.scale_tail,
            "snap": self.snap,
            "quantization": self.quantization,
        }

    @property
    def total(self) -> float:
        """Sum of the terms; it bounds the sup distance and hence ``d_n``."""
        return math.fsum(self.terms.values())


def _bumps(xs: FloatArray, mu: FloatArray, sigma: FloatArray) -> FloatArray:
    z = (xs[:, None] - mu[None, :]) / sigma[None, :]
    return np.exp(-0.5 * z * z)


def _weighted_sup(xs: FloatArray, a: FloatArray, mu: FloatArray, sigma: FloatArray) -> float:
    if a.size == 0:
        return 0.0
    return float(np.max(_bumps(xs, mu, sigma) @ a))


def _snap_locations(mu: FloatArray, step: float, window: FloatArray) -> FloatArray:
    out = np.round(mu / step) * step
    for alt in (np.floor(mu / step) * step, np.ceil(mu / step) * step):
        bad = ~_in_window(out, window)
        if not bad.any():
            break
        out = np.where(bad, alt, out)
    return out


def _snap_scales(sigma: FloatArray, spec: SieveSpec, step: float) -> FloatArray:
    k_lo, k_hi = _scale_index_range(spec, step)
    return np.clip(np.round(sigma / step), k_lo, k_hi) * step


def round_to_net(
    m: FiniteGaussMixture | SignedAtomMeasure,
    spec: SieveSpec,
    covariates: FloatArray,
    sigma: float | None = None,
) -> tuple[FiniteGaussMixture, RoundingBudget]:
    """
    Round a sieve member to the explicit net.

    Atoms with ``|u| <= 1/n``, atoms outside the covariate window and, for the
    location-scale sieve, atoms with scale outside the range are dropped. Kept weights are
    truncated toward zero onto the weight lattice; locations and scales are snapped to the
    nearest lattice point inside the window and the range.

    :param m: Sieve member.

    :param spec: Sieve.

    :param covariates: Covariates defining ``d_n``.

    :param sigma: Shared scale for realizations without scales.

    :return: The net element and the error budget at the covariates.
    """
    xs = np.asarray(covariates, dtype=float).ravel()
    net = NetSpec.from_sieve(spec)
    window = covariate_window(xs, net.radius)
    u, mu, scales = atom_columns(m, sigma)
    if scales is None or u.size == 0:
        zero = RoundingBudget(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
        return FiniteGaussMixture.empty(), zero

    a = np.abs(u)
    big = a > spec.small_weight
    in_range = (scales > spec.scale_lower) & (scales <= spec.scale_upper)
    if spec.kind is MixtureKind.LOCATION:
        in_range = np.ones_like(big)
    near = _in_window(mu, window)
    tail = big & ~in_range
    far = big & in_range & ~near
    kept = big & in_range & near

    k = np.trunc(u[kept] / net.weight_step * (1.0 + _LATTICE_SLACK))
    u_net = k * net.weight_step
    mu_net = _snap_locations(mu[kept], net.location_step, window)
    sigma_net = _snap_scales(scales[kept], spec, net.scale_step)
    rounded = FiniteGaussMixture(u_net, mu_net, sigma_net)

    before = _bumps(xs, mu[kept], scales[kept])
    after = _bumps(xs, mu_net, sigma_net)
    snap = float(np.max(np.abs(before - after) @ a[kept])) if kept.any() else 0.0
    quantization = _weighted_sup(xs, np.abs(u[kept] - u_net), mu_net, sigma_net)
    original = FiniteGaussMixture(u, mu, scales)
    diff = original(xs) - rounded(xs)
    budget = RoundingBudget(
        far=_weighted_sup(xs, a[far], mu[far], scales[far]),
        small=_weighted_sup(xs, a[~big], mu[~big], scales[~big]),
        scale_tail=_weighted_sup(xs, a[tail], mu[tail], scales[tail]),
        snap=snap,
        quantization=quantization,
        distance=float(np.sqrt(np.mean(diff * diff))),
    )
    return rounded, budget


def _above_floor(total: float, parts: int, floor: float, rng: np.random.Generator) -> FloatArray:
    # parts magnitudes, each above floor, summing to total
    if parts == 0:
        return np.empty(0)
    return floor + max(total - parts * floor, 0.0) * rng.dirichlet(np.ones(parts))


def _log_uniform(lo: float, hi: float, rng: np.random.Generator, size: int) -> FloatArray:
    return np.clip(np.exp(rng.uniform(math.log(lo), math.log(hi), size)), lo, hi)


def random_sieve_member(
    spec: SieveSpec, covariates: FloatArray, rng: np.random.Generator
) -> FiniteGaussMixture:
    """
    Draw a random member of the sieve that exercises every clause.

    Big atoms share a random total mass; small atoms share at most ``epsilon``; about one
    atom in five is placed outside the covariate window. Location-scale members also get
    big atoms below and above the scale range, each side carrying at most ``epsilon``.

    :param spec: Sieve.

    :param covariates: Covariates.

    :param rng: Random stream.

    :return: The member.
    """
    xs = np.asarray(covariates, dtype=float).ravel()
    net = NetSpec.from_sieve(spec)
    lo, hi = spec.scale_lower, spec.scale_upper
    inner_lo = lo * (1.0 + 1e-9)
    floor = spec.small_weight * (1.0 + 1e-9)
    location_scale = spec.kind is MixtureKind.LOCATION_SCALE
    budget = spec.n - (3.0 if location_scale else 1.0) * spec.epsilon

    n_big = int(rng.integers(0, spec.max_atoms + 1))
    total = _log_uniform(min(n_big * floor + 1e-3, budget), max(budget, 2e-3), rng, 1)[0]
    n_small = int(rng.integers(0, _MAX_SMALL_ATOMS + 1))
    small = rng.uniform(0.0, spec.small_weight, n_small)
    if small.sum() > 0.0:
        small *= min(1.0, spec.epsilon * rng.random() / small.sum())
    parts = [_above_floor(total, n_big, floor, rng), small]
    if location_scale:
        scales = [_log_uniform(inner_lo, hi, rng, n_big + n_small)]
        for lower, upper in ((lo / 10.0, lo), (hi * (1.0 + 1e-9), 10.0 * hi)):
            side = spec.epsilon * rng.random()
            count = min(int(rng.integers(0, 4)), math.floor(side / floor))
            parts.append(_above_floor(side, count, floor, rng))
            scales.append(_log_uniform(lower, upper, rng, count))
        sigmas = np.concatenate(scales)
    else:
        sigma = _log_uniform(inner_lo, hi, rng, 1)[0]
        sigmas = np.full(n_big + n_small, sigma)
    magnitudes = np.concatenate(parts)
    size = magnitudes.size
    signs = np.where(rng.random(size) < 0.5, -1.0, 1.0)
    inside = xs[rng.integers(xs.size, size=size)] + rng.uniform(-0.9, 0.9, size) * net.radius
    right = rng.random(size) < 0.5
    outside = np.where(
        right,
        xs.max() + net.radius * rng.uniform(1.01, 2.0, size),
        xs.min() - net.radius * rng.uniform(1.01, 2.0, size),
    )
    locations = np.where(rng.random(size) < 0.2, outside, inside)
    return FiniteGaussMixture(signs * magnitudes, locations, sigmas)


@dataclass(frozen=True, slots=True)
class CoveringCheck:
    """
    Outcome of rounding random sieve members to the explicit net.

    :ivar trials: Number of members.
    :ivar max_distance: Largest ``d_n`` between a member and its rounding.
    :ivar max_terms: Largest value of each error term.
    :ivar epsilon: Sieve radius.
    :ivar non_members: Number of drawn members that failed a sieve clause.
    """

    trials: int
    max_distance: float
    max_terms: dict[str, float]
    epsilon: float
    non_members: int

    @property
    def passed(self) -> bool:
        """
        Whether every distance is at most ``8 epsilon`` and every term at most ``2 epsilon``.

        :return: The verdict.
        """
        return (
            self.non_members == 0
            and self.max_distance <= _COVERING_FACTOR * self.epsilon
            and all(v <= _TERM_FACTOR * self.epsilon for v in self.max_terms.values())
        )

    def to_dict(self) -> dict:
        """
        Convert to plain types for JSON.

        :return: Field dictionary with the verdict.
        """
        return {
            "trials": self.trials,
            "max_distance": self.max_distance,
            "max_terms": dict(self.max_terms),
            "epsilon": self.epsilon,
            "non_members": self.non_members,
            "passed": self.passed,
        }


def net_covering_check(
    spec: SieveSpec,
    covariates: FloatArray,
    trials: int,
    rng: np.random.Generator,
    verbose: bool = False,
) -> CoveringCheck:
    """
    Round ``trials`` random sieve members to the net and record the worst errors.

    :param spec: Sieve, with small ``n``.

    :param covariates: Covariates defining ``d_n``.

    :param trials: Number of members.

    :param rng: Random stream.

    :param verbose: Print a summary line.

    :return: The check.
    """
    worst = dict.fromkeys(("far", "small", "scale_tail", "snap", "quantization"), 0.0)
    max_distance = 0.0
    non_members = 0
    for _ in range(trials):
        member = random_sieve_member(spec, covariates, rng)
        if not sieve_membership(member, spec).member:
            non_members += 1
            continue
        _, budget = round_to_net(member, spec, covariates)
        max_distance = max(max_distance, budget.distance)
        for name, value in budget.terms.items():
            worst[name] = max(worst[name], value)
    check = CoveringCheck(trials, max_distance, worst, spec.epsilon, non_members)
    if verbose:
        print(
            f"{LOG_CHECK} sieve.net_covering_check() | round -> members "
            f"[trials={trials}, max d_n={max_distance:.3g}, 8eps={_COVERING_FACTOR * spec.epsilon:.3g}]"
        )
    return check
