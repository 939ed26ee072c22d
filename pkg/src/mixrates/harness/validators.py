"""
Invariant validators over kernels, prior samplers, sieves and rate tables.

Every group draws from its own child of ``SeedSequence(seed)``, so running a subset
gives the same values as running all groups.
"""

__docformat__ = "restructuredtext"
__all__ = [
    "InvariantResult",
    "VALIDATOR_GROUPS",
    "ValidationReport",
    "run_validators",
    "validate_dp",
    "validate_ig",
    "validate_kernels",
    "validate_rates",
    "validate_sga",
    "validate_sieve",
]

import math
from collections.abc import Callable, Sequence
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np
from scipy import stats

from mixrates._constants import LOG_CHECK
from mixrates._enums import MixtureKind, SmallJumpPolicy
from mixrates._errors import QuadratureError
from mixrates.kernels import (
    SpectralCutoff,
    build_cutoff,
    default_x_grid,
    invert_to_space,
    spectral_moments,
    tabulated_moments,
)
from mixrates.priors import (
    InverseGaussian,
    LocationBaseSpec,
    ScalePriorSpec,
    dp_markov_check,
    fit_omega_growth,
    jump_count_mean,
    sample_dp_batch,
    sample_sga,
    sample_sga_process,
    sga_small_ball_bound,
    simulate_total_variation,
    tail_report,
)
from mixrates.rates import RateSpec, dominance_check, rate_exponent, table_formulas
from mixrates.sieve import SieveSpec, mc_sieve_complement, net_constant, net_covering_check

MOMENT_TOL = 1e-7
NORMALIZATION_TOL = 1e-8
KS_TOL = 0.01
COUNT_REL_TOL = 0.02

REFERENCE_FORMULAS: dict[MixtureKind, tuple[str, str, str, str]] = {
    MixtureKind.LOCATION: ("2β/(3β+1)", "2β/(3β+1)", "2β/(2β+1+2β/p)", "2β/(2β+1+2β/p)"),
    MixtureKind.LOCATION_SCALE: ("2β/(3β+2)", "2β/(2β+1+2β/p)", "2β/(2β+1+2β/p)", "β/(β+1)"),
    MixtureKind.HYBRID: ("2β/(3β+1)", "p/(p+1)", "p/(p+1)", "2β/(2β+1)"),
}
"""Formula of ``q`` in each summary-table column."""

REFERENCE_EXPONENTS: tuple[tuple[MixtureKind, int, int, Fraction], ...] = (
    (MixtureKind.LOCATION, 1, 4, Fraction(4, 7)),
    (MixtureKind.HYBRID, 1, 3, Fraction(2, 3)),
    (MixtureKind.LOCATION_SCALE, 2, 1, Fraction(1, 2)),
)


@dataclass(frozen=True, slots=True)
class InvariantResult:
    """
    Outcome of one invariant.

    :ivar group: Validator group.
    :ivar name: Invariant name.
    :ivar passed: Verdict.
    :ivar value: Measured value.
    :ivar threshold: Value the measurement is compared with.
    :ivar detail: Free-form context.
    """

    group: str
    name: str
    passed: bool
    value: float
    threshold: float
    detail: str = ""

    def to_dict(self) -> dict:
        """Get the result as plain types."""
        return asdict(self)


@dataclass(frozen=True, slots=True)
class ValidationReport:
    """
    Results of one validator run.

    :ivar seed: Master seed.
    :ivar groups: Groups that ran.
    :ivar results: Invariant results in run order.
    """

    seed: int
    groups: tuple[str, ...]
    results: tuple[InvariantResult, ...]

    @property
    def passed(self) -> bool:
        """Whether every invariant holds."""
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[InvariantResult, ...]:
        """Invariants that failed."""
        return tuple(r for r in self.results if not r.passed)

    @property
    def exit_code(self) -> int:
        """Process exit code: 0 when every invariant holds, 1 otherwise."""
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        """Get the report as plain types; it carries no timestamps."""
        return {
            "seed": self.seed,
            "groups": list(self.groups),
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }


def _check(
    group: str, name: str, value: float, threshold: float, passed: bool, detail: str = ""
) -> InvariantResult:
    return InvariantResult(group, name, bool(passed), float(value), float(threshold), detail)


def validate_kernels(
    rng: np.random.Generator, cutoff: SpectralCutoff | None = None
) -> list[InvariantResult]:
    """
    Check the sampled cutoff spectrum and a small space table.

    :param rng: Unused; kept for a uniform validator signature.

    :param cutoff: Cutoff under test; built with defaults when omitted.

    :return: Plateau, support, spectral-moment and tabulated-moment results.
    """
    del rng
    cutoff = build_cutoff() if cutoff is None else cutoff
    xi = np.abs(cutoff.frequencies)
    on_plateau = xi <= cutoff.plateau[1]
    outside = xi >= cutoff.support[1]
    plateau_dev = float(np.max(np.abs(cutoff.values[on_plateau] - 1.0), initial=0.0))
    outside_dev = float(np.max(np.abs(cutoff.values[outside]), initial=0.0))
    results = [
        _check("kernels", "plateau_exactly_one", plateau_dev, 0.0, plateau_dev == 0.0),
        _check("kernels", "zero_outside_support", outside_dev, 0.0, outside_dev == 0.0),
    ]

    moments = spectral_moments(cutoff, max_order=4)
    m0 = abs(1.0 - float(moments[0]))
    results.append(
        _check("kernels", "zeroth_moment_normalized", m0, NORMALIZATION_TOL, m0 <= NORMALIZATION_TOL)
    )
    high = float(np.max(moments[1:]))
    results.append(
        _check("kernels", "spectral_moments_vanish", high, MOMENT_TOL, high < MOMENT_TOL)
    )

    try:
        table = invert_to_space(cutoff, default_x_grid(64.0, 2049))
    except QuadratureError as error:
        results.append(
            _check("kernels", "tabulated_odd_moments", math.nan, MOMENT_TOL, False, str(error))
        )
        return results
    odd = float(np.max(np.abs(tabulated_moments(table, max_order=3)[1::2])))
    results.append(_check("kernels", "tabulated_odd_moments", odd, MOMENT_TOL, odd < MOMENT_TOL))
    return results


def validate_sga(rng: np.random.Generator) -> list[InvariantResult]:
    """
    Check the symmetric Gamma samplers against their exact laws.

    :param rng: Random stream.

    :return: Total-variation KS, big-jump count and small-ball results.
    """
    results = []
    for alpha_bar in (0.5, 1.0, 2.0):
        draws = simulate_total_variation(alpha_bar, 1e-5, 100_000, rng, SmallJumpPolicy.DISCARD)
        ks = stats.kstest(draws, stats.gamma(2.0 * alpha_bar).cdf).statistic
        results.append(
            _check(
                "sga",
                f"total_variation_gamma_{alpha_bar:g}",
                ks,
                KS_TOL,
                ks <= KS_TOL,
                "KS distance to Gamma(2 alpha_bar)",
            )
        )

    sites = LocationBaseSpec.pareto().sample
    counts = [len(sample_sga_process(1.0, sites, 1e-3, rng)) for _ in range(5000)]
    expected = jump_count_mean(1.0, 1e-3)
    rel = abs(float(np.mean(counts)) - expected) / expected
    results.append(
        _check(
            "sga",
            "big_jump_count_mean",
            rel,
            COUNT_REL_TOL,
            rel <= COUNT_REL_TOL,
            f"expected={expected:.4f}",
        )
    )

    alpha, x, delta = 0.5, 1.0, 0.25
    draws = sample_sga(alpha, rng, 1_000_000)
    hits = int(np.count_nonzero(np.abs(draws - x) <= delta))
    interval = stats.binomtest(hits, draws.size).proportion_ci(confidence_level=0.99, method="wilson")
    low = interval.low
    bound = sga_small_ball_bound(alpha, x, delta)
    results.append(
        _check("sga", "small_ball_lower_bound", low, bound, low > bound, "99% Wilson lower limit")
    )
    return results


def validate_ig(rng: np.random.Generator) -> list[InvariantResult]:
    """
    Check the inverse-Gaussian tail conditions by quadrature.

    :param rng: Unused.

    :return: One result per ``(a, b)``.
    """
    del rng
    results = []
    for a, b in ((1.0, 1.0), (2.0, 0.5)):
        report = tail_report(InverseGaussian(a, b))
        violations = report.upper_violations + report.lower_violations
        results.append(
            _check(
                "ig",
                f"tail_conditions_{a:g}_{b:g}",
                violations,
                0.0,
                report.passed,
                f"small_ball_constant={report.small_ball_constant:.4g}",
            )
        )
    return results


def validate_dp(rng: np.random.Generator) -> list[InvariantResult]:
    """
    Check the Dirichlet-process scale sampler.

    :param rng: Random stream.

    :return: Beta-marginal, Markov-bound and omega-growth results.
    """
    spec = ScalePriorSpec.dirichlet_process(1.0)
    base = spec.base
    cell = (0.5, 1.5)
    mass = base.mass(*cell)
    probs = sample_dp_batch(spec.alpha_sigma, base, [cell], 100_000, rng)[:, 0]
    marginal = stats.beta(spec.alpha_sigma * mass, spec.alpha_sigma * (1.0 - mass))
    ks = stats.kstest(probs, marginal.cdf).statistic
    results = [
        _check(
            "dp", "beta_marginal", ks, KS_TOL, ks <= KS_TOL, "KS distance to Beta(alpha G, alpha (1 - G))"
        ),
    ]

    checks = dp_markov_check(spec, [1.0, 2.0, 5.0, 10.0], 100_000, rng)
    worst = max(c.frequency - c.bound for c in checks)
    passed = all(c.passed for c in checks)
    results.append(_check("dp", "markov_tail_bounds", worst, 0.0, passed, "max frequency - bound"))

    growth = fit_omega_growth(range(4, 13), 1.0, spec.alpha_sigma, base)
    results.append(
        _check(
            "dp",
            "omega_exponential_growth",
            growth.exponential,
            0.0,
            growth.exponential > 0.0,
            "coefficient of 2^J",
        )
    )
    return results


def validate_sieve(rng: np.random.Generator) -> list[InvariantResult]:
    """
    Check the sieve entropy constant, the net covering and the complement mass.

    :param rng: Random stream.

    :return: Constant, covering and complement results.
    """
    constant = net_constant(1.0, 1.0)
    results = [_check("sieve", "net_constant", constant, 9.5 / 64.0, constant == 9.5 / 64.0)]

    spec = SieveSpec(50, 1.0, 0.2)
    covering = net_covering_check(spec, rng.standard_normal(spec.n), 1000, rng)
    results.append(
        _check(
            "sieve",
            "net_covering",
            covering.max_distance,
            8.0 * spec.epsilon,
            covering.passed,
            f"non_members={covering.non_members}",
        )
    )

    complement = mc_sieve_complement(
        MixtureKind.LOCATION,
        SieveSpec(50, 1.0, 0.8),
        ScalePriorSpec.inverse_gaussian(),
        1.0,
        10_000,
        rng,
    )
    results.append(
        _check(
            "sieve",
            "complement_clause_bounds",
            complement.violations,
            complement.trials,
            complement.passed,
            "violations out of trials",
        )
    )
    return results


def validate_rates(rng: np.random.Generator) -> list[InvariantResult]:
    """
    Check the rate table against its reference formulas, dominance and exact examples.

    :param rng: Unused.

    :return: Table, dominance and exact-value results.
    """
    del rng
    formulas = table_formulas()
    mismatches = sum(
        formulas[(kind, column)] != expected
        for kind, row in REFERENCE_FORMULAS.items()
        for column, expected in enumerate(row)
    )
    results = [
        _check("rates", "symbolic_table", mismatches, 0.0, mismatches == 0, "mismatched cells")
    ]

    lattice = [(b, p) for b in np.linspace(0.1, 5.0, 20) for p in np.geomspace(0.1, 50.0, 20)]
    unordered = sum(not dominance_check(float(b), float(p)).ordered for b, p in lattice)
    results.append(
        _check(
            "rates",
            "dominance_lattice",
            unordered,
            0.0,
            unordered == 0,
            "hybrid >= location >= location-scale",
        )
    )

    for kind, beta, p, expected in REFERENCE_EXPONENTS:
        got = rate_exponent(RateSpec(kind, beta, p)).exact_q
        results.append(
            _check(
                "rates",
                f"exact_{kind.label}_{beta}_{p}",
                float(got),
                float(expected),
                got == expected,
                str(got),
            )
        )
    return results


_VALIDATORS: dict[str, Callable[[np.random.Generator], list[InvariantResult]]] = {
    "kernels": validate_kernels,
    "sga": validate_sga,
    "ig": validate_ig,
    "dp": validate_dp,
    "sieve": validate_sieve,
    "rates": validate_rates,
}

VALIDATOR_GROUPS = tuple(_VALIDATORS)


def run_validators(
    which: Sequence[str] | None = None,
    seed: int = 0,
    verbose: bool = False,
    cutoff: SpectralCutoff | None = None,
) -> ValidationReport:
    """
    Run validator groups.

    :param which: Group names; all of :data:`VALIDATOR_GROUPS` when omitted.

    :param seed: Master seed.

    :param verbose: Print one line per invariant.

    :param cutoff: Cutoff handed to the kernel group.

    :return: The report.
    :raises ValueError: If a group name is unknown.

    """
    groups = VALIDATOR_GROUPS if which is None else tuple(which)
    unknown = sorted(set(groups) - set(VALIDATOR_GROUPS))
    if unknown:
        raise ValueError(
            f"Unknown validator groups: {unknown}. Known groups: {list(VALIDATOR_GROUPS)}"
        )
    children = np.random.SeedSequence(seed).spawn(len(VALIDATOR_GROUPS))
    streams = dict(zip(VALIDATOR_GROUPS, children, strict=True))

    results: list[InvariantResult] = []
    for group in groups:
        rng = np.random.default_rng(streams[group])
        found = validate_kernels(rng, cutoff) if group == "kernels" else _VALIDATORS[group](rng)
        for result in found:
            if verbose:
                print(
                    f"{LOG_CHECK} harness.run_validators() | check invariant -> {result.group}.{result.name} "
                    f"[value={result.value:.6g}, threshold={result.threshold:.6g}, passed={result.passed}]"
                )
        results.extend(found)
    return ValidationReport(seed, groups, tuple(results))
