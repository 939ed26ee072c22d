"""Monte Carlo prior mass of the sieve complement against its analytic bounds."""

__docformat__ = "restructuredtext"
__all__ = [
    "ClauseBound",
    "ClauseEstimate",
    "ComplementReport",
    "complement_bounds",
    "mc_sieve_complement",
]

import math
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from mixrates._constants import LOG_CHECK, MIN_COMPLEMENT_TRIALS
from mixrates._enums import MixtureKind, ScalePriorKind
from mixrates.priors import (
    ScalePriorSpec,
    jump_count_mean,
    lump_gamma_params,
    sample_dp_batch,
    sample_jump_magnitudes,
)
from mixrates.sieve._spec import (
    CLAUSE_BIG_COUNT,
    CLAUSE_HIGH_SCALE_MASS,
    CLAUSE_LOW_SCALE_MASS,
    CLAUSE_SIGMA_RANGE,
    CLAUSE_SMALL_MASS,
    CLAUSE_TOTAL_MASS,
    SieveSpec,
    sieve_kind_for,
)

_RESOLUTION_COUNT = 10
_TRIAL_CHUNK = 10_000
_DEEP_FLOOR_FACTOR = 1e-3
"""Jumps are simulated exactly down to this fraction of ``1/n``; the rest is lumped."""
_CONFIDENCE = 0.95

FORM_EXACT = "exact"
FORM_MARKOV = "markov"
FORM_CHERNOFF = "chernoff"
FORM_CHEBYSHEV = "chebyshev"
FORM_SHAPE = "shape"


@dataclass(frozen=True, slots=True)
class ClauseBound:
    """
    Analytic upper bound on the prior probability that one clause fails.

    :ivar name: Clause name.
    :ivar value: Bound, clipped to ``[0, 1]``.
    :ivar form: ``"exact"``, ``"markov"``, ``"chernoff"``, ``"chebyshev"``, or
        ``"shape"`` for bounds known only up to constants.
    """

    name: str
    value: float
    form: str


def _chernoff(rate: float, limit: float) -> float:
    # P(N > limit) for N ~ Poisson(rate)
    k = math.floor(limit) + 1
    if rate <= 0.0:
        return 0.0
    if k <= rate:
        return 1.0
    return math.exp(-rate + k * (1.0 + math.log(rate / k)))


def _chebyshev(mass: float, epsilon: float) -> float:
    # P(U > epsilon) for U ~ Gamma(2 mass, 1)
    mean = 2.0 * mass
    if mean >= epsilon:
        return 1.0
    return min(1.0, mean / (epsilon - mean) ** 2)


def _check_kinds(kind: MixtureKind, spec: SieveSpec, scale: ScalePriorSpec) -> None:
    if sieve_kind_for(kind) is not spec.kind:
        raise ValueError(f"A {kind.label} prior needs the {sieve_kind_for(kind).label} sieve")
    if kind is MixtureKind.HYBRID and scale.kind is not ScalePriorKind.DIRICHLET_PROCESS:
        raise ValueError("The hybrid prior needs a Dirichlet-process scale prior")


def complement_bounds(
    kind: MixtureKind, spec: SieveSpec, scale: ScalePriorSpec, alpha_bar: float
) -> dict[str, ClauseBound]:
    """
    Evaluate the analytic bound of every sieve clause at ``(n, H, epsilon)``.

    - Scale range: exact ``G(sigma <= n^(-1/b2)) + G(sigma > n^(1/b1))``.
    - Total mass: ``2^(2 alpha_bar) e^(-n/2)``.
    - Small-weight mass: ``exp(-n epsilon^2 + 2 alpha_bar (e^epsilon - 1))``.
    - Big-weight count: Poisson Chernoff bound with intensity ``2 alpha_bar E1(1/n)``,
      thinned by the in-range scale mass for the location-scale prior.
    - Scale-tail masses: Chebyshev on ``Gamma(2 alpha(A))`` for the location-scale
      prior; ``epsilon^-2 e^(-a n) + e^(-a' n)`` up to constants for the hybrid prior.

    :param kind: Prior family.

    :param spec: Sieve matching the family.

    :param scale: Scale prior.

    :param alpha_bar: Total mass of the symmetric Gamma process.

    :return: Bounds keyed by clause name, in the sieve's clause order.
    :raises ValueError: If the sieve or scale prior does not fit the family.

    """
    _check_kinds(kind, spec, scale)
    law = scale.base
    n, eps = spec.n, spec.epsilon
    p_low = law.mass(0.0, spec.scale_lower)
    p_high = law.mass(spec.scale_upper, math.inf)
    rate = 2.0 * alpha_bar * float(special.exp1(1.0 / n))
    total = ClauseBound(CLAUSE_TOTAL_MASS, min(1.0, 2.0 ** (2.0 * alpha_bar) * math.exp(-n / 2.0)), FORM_MARKOV)
    small = ClauseBound(
        CLAUSE_SMALL_MASS,
        min(1.0, math.exp(-n * eps * eps + 2.0 * alpha_bar * math.expm1(eps))),
        FORM_MARKOV,
    )
    if spec.kind is MixtureKind.LOCATION:
        bounds = [
            ClauseBound(CLAUSE_SIGMA_RANGE, min(1.0, p_low + p_high), FORM_EXACT),
            total,
            small,
            ClauseBound(CLAUSE_BIG_COUNT, _chernoff(rate, spec.count_limit), FORM_CHERNOFF),
        ]
    elif kind is MixtureKind.HYBRID:
        def shape(a: float, a_dp: float) -> float:
            return min(1.0, math.exp(-a * n) / (eps * eps) + math.exp(-a_dp * n))

        bounds = [
            total,
            ClauseBound(CLAUSE_BIG_COUNT, _chernoff(rate, spec.count_limit), FORM_CHERNOFF),
            small,
            ClauseBound(CLAUSE_LOW_SCALE_MASS, shape(scale.a2, scale.a5), FORM_SHAPE),
            ClauseBound(CLAUSE_HIGH_SCALE_MASS, shape(scale.a1, scale.a4), FORM_SHAPE),
        ]
    else:
        in_range = max(0.0, 1.0 - p_low - p_high)
        bounds = [
            total,
            ClauseBound(CLAUSE_BIG_COUNT, _chernoff(rate * in_range, spec.count_limit), FORM_CHERNOFF),
            small,
            ClauseBound(CLAUSE_LOW_SCALE_MASS, _chebyshev(alpha_bar * p_low, eps), FORM_CHEBYSHEV),
            ClauseBound(CLAUSE_HIGH_SCALE_MASS, _chebyshev(alpha_bar * p_high, eps), FORM_CHEBYSHEV),
        ]
    return {b.name: b for b in bounds}


@dataclass(frozen=True, slots=True)
class ClauseEstimate:
    """
    Empirical failure frequency of one clause.

    :ivar name: Clause name.
    :ivar violations: Number of draws violating the clause.
    :ivar frequency: ``violations / trials``.
    :ivar bound: Analytic bound.
    :ivar form: Form of the bound.
    :ivar verdict: ``"below_resolution"`` under ten violations, otherwise ``"pass"`` or
        ``"fail"`` as the lower 95% Wilson limit lies below the bound or not; ``"reported"`` for
        bounds known only up to constants.
    """

    name: str
    violations: int
    frequency: float
    bound: float
    form: str
    verdict: str

    def to_dict(self) -> dict:
        """
        Convert to plain types for JSON.

        :return: Field dictionary with the frequency as ``empirical_freq``.
        """
        return {
            "name": self.name,
            "violations": self.violations,
            "empirical_freq": self.frequency,
            "analytic_bound": self.bound,
            "form": self.form,
            "verdict": self.verdict,
        }


def _finite(value: float) -> float | None:
    return value if math.isfinite(value) else None


@dataclass(frozen=True, slots=True)
class ComplementReport:
    """
    Estimated prior mass of the sieve complement.

    :ivar kind: Prior family.
    :ivar spec: Sieve.
    :ivar alpha_bar: Total mass of the symmetric Gamma process.
    :ivar trials: Number of prior draws.
    :ivar clauses: Per-clause estimates in clause order.
    :ivar violations: Number of draws outside the sieve.
    :ivar log_estimate: ``log(violations / trials)``, ``-inf`` without violations.
    :ivar log_ci: 95% Wilson interval on the log scale.
    :ivar log_bound: Log of the union of the clause bounds.
    """

    kind: MixtureKind
    spec: SieveSpec
    alpha_bar: float
    trials: int
    clauses: tuple[ClauseEstimate, ...]
    violations: int
    log_estimate: float
    log_ci: tuple[float, float]
    log_bound: float

    @property
    def below_resolution(self) -> bool:
        """
        Whether fewer than ten draws left the sieve.

        :return: ``True`` when the total frequency is not resolved.
        """
        return self.violations < _RESOLUTION_COUNT

    @property
    def passed(self) -> bool:
        """
        Whether no clause failed its bound.

        :return: ``True`` unless some verdict is ``"fail"``.
        """
        return all(c.verdict != "fail" for c in self.clauses)

    def to_dict(self) -> dict:
        """
        Convert to plain types for JSON; non-finite logs become ``None``.

        :return: Report dictionary.
        """
        return {
            "kind": self.kind.label,
            "n": self.spec.n,
            "H": self.spec.H,
            "epsilon": self.spec.epsilon,
            "alpha_bar": self.alpha_bar,
            "trials": self.trials,
            "gamma": self.spec.gamma,
            "clauses": [c.to_dict() for c in self.clauses],
            "violations": self.violations,
            "below_resolution": self.below_resolution,
            "log_estimate": _finite(self.log_estimate),
            "log_ci": [_finite(v) for v in self.log_ci],
            "log_bound": _finite(self.log_bound),
            "passed": self.passed,
        }


def _wilson_interval(k: int, trials: int) -> tuple[float, float]:
    interval = stats.binomtest(k, trials).proportion_ci(
        confidence_level=_CONFIDENCE, method="wilson"
    )
    return float(interval.low), float(interval.high)


def _log_interval(k: int, trials: int) -> tuple[float, float]:
    low, high = _wilson_interval(k, trials)
    return (math.log(low) if low > 0.0 else -math.inf), math.log(high)


def _verdict(k: int, trials: int, bound: ClauseBound) -> str:
    if k < _RESOLUTION_COUNT:
        return "below_resolution"
    if bound.form == FORM_SHAPE:
        return "reported"
    low, _ = _wilson_interval(k, trials)
    return "pass" if low <= bound.value else "fail"


def _simulate_chunk(
    kind: MixtureKind,
    spec: SieveSpec,
    scale: ScalePriorSpec,
    alpha_bar: float,
    size: int,
    rng: np.random.Generator,
) -> dict[str, np.ndarray]:
    law = scale.base
    floor = _DEEP_FLOOR_FACTOR * spec.small_weight
    counts = rng.poisson(jump_count_mean(alpha_bar, floor), size)
    magnitudes = sample_jump_magnitudes(int(counts.sum()), floor, rng)
    owners = np.repeat(np.arange(size), counts)
    shape, gamma_scale = lump_gamma_params(alpha_bar, floor)
    lumped = rng.gamma(shape, gamma_scale, size) + rng.gamma(shape, gamma_scale, size)
    big = magnitudes > spec.small_weight

    def per_trial(weights: np.ndarray) -> np.ndarray:
        return np.bincount(owners, weights=weights, minlength=size)

    total = per_trial(magnitudes) + lumped
    small = per_trial(np.where(big, 0.0, magnitudes)) + lumped
    if spec.kind is MixtureKind.LOCATION:
        sigma = law.sample(rng, size)
        return {
            CLAUSE_SIGMA_RANGE: (sigma <= spec.scale_lower) | (sigma > spec.scale_upper),
            CLAUSE_TOTAL_MASS: total > spec.n,
            CLAUSE_SMALL_MASS: small > spec.epsilon,
            CLAUSE_BIG_COUNT: per_trial(big.astype(float)) > spec.count_limit,
        }

    if kind is MixtureKind.HYBRID:
        cells = [(0.0, spec.scale_lower), (spec.scale_upper, math.inf)]
        tails = sample_dp_batch(scale.alpha_sigma, law, cells, size, rng)
        p_low, p_high = tails[:, 0], tails[:, 1]
    else:
        p_low = np.full(size, law.mass(0.0, spec.scale_lower))
        p_high = np.full(size, law.mass(spec.scale_upper, math.inf))
    draw = rng.random(magnitudes.size)
    low = draw < p_low[owners]
    high = draw >= 1.0 - p_high[owners]
    lump_draw = rng.random(size)
    lump_low = lump_draw < p_low
    lump_high = lump_draw >= 1.0 - p_high
    in_range = big & ~low & ~high
    return {
        CLAUSE_TOTAL_MASS: total > spec.n,
        CLAUSE_BIG_COUNT: per_trial(in_range.astype(float)) > spec.count_limit,
        CLAUSE_SMALL_MASS: small > spec.epsilon,
        CLAUSE_LOW_SCALE_MASS: per_trial(np.where(low, magnitudes, 0.0)) + lumped * lump_low
        > spec.epsilon,
        CLAUSE_HIGH_SCALE_MASS: per_trial(np.where(high, magnitudes, 0.0)) + lumped * lump_high
        > spec.epsilon,
    }


def mc_sieve_complement(
    kind: MixtureKind,
    spec: SieveSpec,
    scale: ScalePriorSpec,
    alpha_bar: float,
    trials: int,
    rng: np.random.Generator,
    verbose: bool = False,
) -> ComplementReport:
    """
    Estimate the prior probability of leaving the sieve, clause by clause.

    Jumps of the symmetric Gamma process are simulated exactly down to ``1e-3 / n``;
    the remainder enters as moment-matched Gamma mass. Scales are only classified as
    below, inside or above the range; the hybrid prior draws the two tail masses of its
    Dirichlet-process scale measure per trial. Locations never enter a clause and are not
    drawn.

    :param kind: Prior family.

    :param spec: Sieve matching the family.

    :param scale: Scale prior.

    :param alpha_bar: Positive total mass of the symmetric Gamma process.

    :param trials: Number of prior draws, at least ten thousand.

    :param rng: Random stream.

    :param verbose: Print one line per clause.

    :return: The report.
    :raises ValueError: If ``trials`` is too small or the inputs do not fit together.

    """
    if trials < MIN_COMPLEMENT_TRIALS:
        raise ValueError(f"trials must be at least {MIN_COMPLEMENT_TRIALS}, got {trials}")
    if not alpha_bar > 0.0:
        raise ValueError(f"alpha_bar must be positive, got {alpha_bar}")
    bounds = complement_bounds(kind, spec, scale, alpha_bar)
    violations = dict.fromkeys(bounds, 0)
    outside = 0
    for start in range(0, trials, _TRIAL_CHUNK):
        size = min(_TRIAL_CHUNK, trials - start)
        flags = _simulate_chunk(kind, spec, scale, alpha_bar, size, rng)
        any_flag = np.zeros(size, dtype=bool)
        for name, flag in flags.items():
            violations[name] += int(np.count_nonzero(flag))
            any_flag |= flag
        outside += int(np.count_nonzero(any_flag))

    clauses = []
    for name, bound in bounds.items():
        k = violations[name]
        estimate = ClauseEstimate(name, k, k / trials, bound.value, bound.form, _verdict(k, trials, bound))
        clauses.append(estimate)
        if verbose:
            print(
                f"{LOG_CHECK} sieve.mc_sieve_complement() | {estimate.verdict} -> {name} "
                f"[freq={estimate.frequency:.3e}, bound={bound.value:.3e}]"
            )
    union = min(1.0, math.fsum(b.value for b in bounds.values()))
    return ComplementReport(
        kind=kind,
        spec=spec,
        alpha_bar=alpha_bar,
        trials=trials,
        clauses=tuple(clauses),
        violations=outside,
        log_estimate=math.log(outside / trials) if outside else -math.inf,
        log_ci=_log_interval(outside, trials),
        log_bound=math.log(union) if union > 0.0 else -math.inf,
    )
