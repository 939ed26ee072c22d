"""Built-in regression functions and covariate designs for the sweeps."""

__docformat__ = "restructuredtext"
__all__ = [
    "DesignDistribution",
    "TestFunction",
    "builtin_designs",
    "builtin_test_functions",
    "design",
    "empirical_moment",
    "gaussian_bump",
    "heavy_tail",
    "holder_quotient",
    "moment_trend",
    "pareto_design",
    "tent",
    "test_function",
    "weierstrass",
    "weierstrass_terms",
]

import functools
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import special, stats

from mixrates.custom_types import Evaluable, FloatArray
from mixrates.mixture import EvalGrid
from mixrates.priors import LocationBaseSpec

WEIERSTRASS_MAX_TERMS = 14
"""Largest frequency index ``2^K`` representable on the default smoothing grid."""
WEIERSTRASS_TOLERANCE = 1e-6
_ENVELOPE_BANDWIDTH = 10.0
_HOLDER_LEVELS = range(1, 13)


@dataclass(frozen=True, slots=True, eq=False)
class TestFunction:
    """
    Integrable regression function of known Hölder order.

    :ivar name: Catalog key.
    :ivar evaluator: Vectorized function.
    :ivar beta: Hölder order; ``math.inf`` for analytic functions.
    :ivar l1_norm: ``||f||_1``.
    :ivar sup_norm: ``||f||_inf``.
    :ivar holder_norm: ``||f||_inf`` plus the largest measured Hölder quotient of order
        ``min(beta, 1)``.
    :ivar bandwidth: Angular frequency beyond which the spectrum is negligible, ``None``
        when the spectrum decays only polynomially.
    """

    __test__ = False

    name: str
    evaluator: Evaluable = field(repr=False)
    beta: float
    l1_norm: float
    sup_norm: float
    holder_norm: float
    bandwidth: float | None = None

    def __call__(self, x: FloatArray | float) -> FloatArray:
        """Evaluate the function."""
        return self.evaluator(np.asarray(x, dtype=float))


@dataclass(frozen=True, slots=True, eq=False)
class DesignDistribution:
    """
    Covariate distribution ``Q0``.

    :ivar name: Catalog key.
    :ivar moment_index: ``sup {p : E|X|^p < inf}``.
    :ivar sampler: ``(rng, size) -> draws``.
    :ivar cdf: Distribution function.
    """

    name: str
    moment_index: float
    sampler: Callable[[np.random.Generator, int], FloatArray] = field(repr=False)
    cdf: Callable[[FloatArray], FloatArray] = field(repr=False)

    def sample(self, rng: np.random.Generator, size: int) -> FloatArray:
        """Draw ``size`` covariates."""
        return np.asarray(self.sampler(rng, size), dtype=float)

    def annulus_mass(self, inner: float, outer: float) -> float:
        """
        Get ``Q0(inner < |X| <= outer)``.

        :param inner: Inner radius, at least 0.

        :param outer: Outer radius; ``math.inf`` allowed.

        :return: The mass.
        """
        c = np.asarray(self.cdf(np.array([outer, inner, -inner, -outer])), dtype=float)
        return float((c[0] - c[1]) + (c[2] - c[3]))


def holder_quotient(
    f: Evaluable,
    exponent: float,
    levels: Sequence[int] = _HOLDER_LEVELS,
    radius: float = 2.0,
    points: int = 4097,
) -> FloatArray:
    """
    Dyadic Hölder quotients ``max_x |f(x + d) - f(x)| / d^exponent`` at ``d = 2^-l``.

    Bounded quotients across the levels indicate membership of the order; quotients
    that grow like ``2^(l (exponent - beta))`` indicate an order above the true one.

    :param f: Vectorized function.

    :param exponent: Order in ``(0, 1]``.

    :param levels: Dyadic levels ``l``.

    :param radius: Half width of the sampled interval.

    :param points: Number of base points.

    :return: One quotient per level.
    :raises ValueError: If the exponent is outside ``(0, 1]``.

    """
    if not 0.0 < exponent <= 1.0:
        raise ValueError(f"exponent must lie in (0, 1], got {exponent}")
    x = np.linspace(-radius, radius, points)
    fx = np.asarray(f(x), dtype=float)
    out = np.empty(len(levels))
    for i, level in enumerate(levels):
        d = 2.0 ** -level
        out[i] = np.max(np.abs(np.asarray(f(x + d), dtype=float) - fx)) / d**exponent
    return out


def _trapezoid_l1(f: Evaluable, radius: float, spacing: float) -> tuple[float, float]:
    grid = EvalGrid.uniform(-radius, radius, spacing)
    values = np.abs(np.asarray(f(grid.points), dtype=float))
    return float(grid.weights @ values), float(np.max(values))


def _gaussian(x: FloatArray) -> FloatArray:
    return np.exp(-0.5 * x * x)


def gaussian_bump() -> TestFunction:
    """Analytic control ``exp(-x^2 / 2)``."""
    lipschitz = float(np.max(holder_quotient(_gaussian, 1.0)))
    return TestFunction(
        name="gaussian",
        evaluator=_gaussian,
        beta=math.inf,
        l1_norm=math.sqrt(2.0 * math.pi),
        sup_norm=1.0,
        holder_norm=1.0 + lipschitz,
        bandwidth=_ENVELOPE_BANDWIDTH,
    )


def weierstrass_terms(beta: float, k_max: int = WEIERSTRASS_MAX_TERMS) -> int:
    """
    Get the truncation ``K = min(ceil(log2(1e6) / beta), k_max)``.

    :param beta: Hölder order in ``(0, 1)``.

    :param k_max: Largest admissible ``K``.

    :return: ``K``; the dropped tail is below ``1e-6`` unless ``k_max`` binds.
    """
    return min(math.ceil(math.log2(1.0 / WEIERSTRASS_TOLERANCE) / beta), k_max)


def _weierstrass(x: FloatArray, beta: float, terms: int) -> FloatArray:
    total = np.zeros_like(x)
    for k in range(terms + 1):
        total += 2.0 ** (-k * beta) * np.cos(2.0**k * x)
    return np.exp(-0.5 * x * x) * total


@functools.cache
def weierstrass(beta: float, k_max: int = WEIERSTRASS_MAX_TERMS) -> TestFunction:
    """
    Weierstrass envelope ``W_beta(x) = exp(-x^2/2) sum_{k <= K} 2^(-k beta) cos(2^k x)``.

    The truncated sum is smooth but behaves like a ``C^beta`` function down to the scale
    ``2^-K``.

    :param beta: Hölder order in ``(0, 1)``.

    :param k_max: Largest admissible ``K``.

    :return: The test function with numerically certified norms.
    :raises ValueError: If ``beta`` is outside ``(0, 1)``.

    """
    if not 0.0 < beta < 1.0:
        raise ValueError(f"beta must lie in (0, 1), got {beta}")
    terms = weierstrass_terms(beta, k_max)
    evaluator = functools.partial(_weierstrass, beta=beta, terms=terms)
    l1, _ = _trapezoid_l1(evaluator, 12.0, 2.0 ** -(terms + 2))
    sup = float(sum(2.0 ** (-k * beta) for k in range(terms + 1)))
    quotient = float(np.max(holder_quotient(evaluator, beta, range(1, terms + 1))))
    return TestFunction(
        name=f"weierstrass_{beta:g}",
        evaluator=evaluator,
        beta=float(beta),
        l1_norm=l1,
        sup_norm=sup,
        holder_norm=sup + quotient,
        bandwidth=2.0**terms + _ENVELOPE_BANDWIDTH,
    )


def _tent(x: FloatArray) -> FloatArray:
    return np.maximum(0.0, 1.0 - np.abs(x))


def tent() -> TestFunction:
    """Unit tent ``max(0, 1 - |x|)``, Lipschitz with ``||f||_1 = 1``."""
    return TestFunction(
        name="tent",
        evaluator=_tent,
        beta=1.0,
        l1_norm=1.0,
        sup_norm=1.0,
        holder_norm=2.0,
    )


def _heavy_tail(x: FloatArray, gamma: float) -> FloatArray:
    return (1.0 + x * x) ** (-0.5 * gamma)


@functools.cache
def heavy_tail(gamma: float = 1.1) -> TestFunction:
    """
    Polynomially decaying ``(1 + x^2)^(-gamma/2)``, integrable for ``gamma > 1``.

    :param gamma: Decay power.

    :return: The test function.
    :raises ValueError: If ``gamma <= 1``.

    """
    if not gamma > 1.0:
        raise ValueError(f"gamma must exceed 1 for an integrable function, got {gamma}")
    evaluator = functools.partial(_heavy_tail, gamma=gamma)
    lipschitz = float(np.max(holder_quotient(evaluator, 1.0)))
    return TestFunction(
        name=f"heavy_tail_{gamma:g}",
        evaluator=evaluator,
        beta=math.inf,
        l1_norm=float(special.beta(0.5, 0.5 * (gamma - 1.0))),
        sup_norm=1.0,
        holder_norm=1.0 + lipschitz,
        bandwidth=40.0,
    )


@functools.cache
def builtin_test_functions() -> dict[str, TestFunction]:
    """
    Get the catalog of regression functions.

    The catalog is a fixed choice of examples: the analytic Gaussian bump, Weierstrass
    envelopes of order 0.4, 0.6 and 0.8, the unit tent and the heavy-tailed
    ``(1 + x^2)^-0.55``.

    :return: Test functions keyed by name.
    """
    functions = [
        gaussian_bump(),
        weierstrass(0.4),
        weierstrass(0.6),
        weierstrass(0.8),
        tent(),
        heavy_tail(1.1),
    ]
    return {f.name: f for f in functions}


def test_function(name: str, beta: float | None = None) -> TestFunction:
    """
    Look up a test function.

    ``"weierstrass"`` without a suffix builds the envelope of order ``beta``.

    :param name: Catalog key.

    :param beta: Order for the bare ``"weierstrass"`` family.

    :return: The test function.
    :raises ValueError: If the name is unknown.

    """
    if name == "weierstrass":
        if beta is None:
            raise ValueError("The weierstrass family needs beta")
        return weierstrass(float(beta))
    catalog = builtin_test_functions()
    if name not in catalog:
        raise ValueError(f"Unknown test function: {name!r}. Choose one of {sorted(catalog)} or 'weierstrass'.")
    return catalog[name]


test_function.__test__ = False


def pareto_design(nu: float) -> DesignDistribution:
    """
    Symmetrized Pareto design with ``P(|X| > t) = (1 + t)^-nu``.

    :param nu: Tail index; moments of order below ``nu`` are finite.

    :return: The design.
    """
    law = LocationBaseSpec.pareto(b6=nu + 1.0)
    return DesignDistribution(f"pareto_{nu:g}", float(nu), law.sample, law.cdf)


def _scipy_design(name: str, law, moment_index: float) -> DesignDistribution:
    def sampler(rng: np.random.Generator, size: int) -> FloatArray:
        return np.asarray(law.rvs(size=size, random_state=rng), dtype=float)

    return DesignDistribution(name, moment_index, sampler, law.cdf)


@functools.cache
def builtin_designs() -> dict[str, DesignDistribution]:
    """
    Get the catalog of covariate designs.

    Standard Gaussian, symmetrized Pareto with ``nu`` in ``{1, 2, 4}`` and uniform on
    ``[-1, 1]``; the choice is ours.

    :return: Designs keyed by name.
    """
    designs = [
        _scipy_design("gaussian", stats.norm(), math.inf),
        pareto_design(1.0),
        pareto_design(2.0),
        pareto_design(4.0),
        _scipy_design("uniform", stats.uniform(loc=-1.0, scale=2.0), math.inf),
    ]
    return {d.name: d for d in designs}


def design(name: str) -> DesignDistribution:
    """
    Look up a design.

    :param name: Catalog key.

    :return: The design.
    :raises ValueError: If the name is unknown.

    """
    catalog = builtin_designs()
    if name not in catalog:
        raise ValueError(f"Unknown design: {name!r}. Choose one of {sorted(catalog)}.")
    return catalog[name]


def empirical_moment(
    dist: DesignDistribution, p: float, size: int, rng: np.random.Generator
) -> float:
    """
    Get the sample mean of ``|X|^p`` over ``size`` draws.

    :param dist: Design.

    :param p: Moment order.

    :param size: Number of draws.

    :param rng: Random stream.

    :return: The empirical moment.
    """
    return float(np.mean(np.abs(dist.sample(rng, size)) ** p))


def moment_trend(
    dist: DesignDistribution,
    p: float,
    sizes: Sequence[int],
    repeats: int,
    rng: np.random.Generator,
) -> FloatArray:
    """
    Median empirical ``p``-th moment at increasing batch sizes.

    A finite moment gives medians that settle; an infinite one gives medians that keep
    growing with the batch size.

    :param dist: Design.

    :param p: Moment order.

    :param sizes: Batch sizes.

    :param repeats: Batches per size.

    :param rng: Random stream.

    :return: One median per size.
    """
    return np.array(
        [
            float(np.median([empirical_moment(dist, p, size, rng) for _ in range(repeats)]))
            for size in sizes
        ]
    )
