"""Scale priors: the inverse-Gaussian law and its tail constants."""

__docformat__ = "restructuredtext"
__all__ = [
    "InverseGaussian",
    "ScaleDistribution",
    "ScalePriorSpec",
    "TailReport",
    "inverse_gaussian_ops",
    "tail_report",
]

import math
from dataclasses import dataclass, field
from typing import Any, Protocol, runtime_checkable

import numpy as np
from scipy import integrate, stats

from mixrates._enums import ScalePriorKind
from mixrates.custom_types import FloatArray
from mixrates.utils import fit_loglog_slope

_QUAD_RTOL = 1e-10
_QUAD_LIMIT = 200
_VIOLATION_SLACK = 1e-9


@runtime_checkable
class ScaleDistribution(Protocol):
    """A probability law on ``(0, inf)`` that the scale samplers can draw from."""

    def cdf(self, x: FloatArray | float) -> FloatArray: ...

    def log_mass(self, lower: float, upper: float) -> float: ...

    def sample(self, rng: np.random.Generator, size: int | tuple[int, ...]) -> FloatArray: ...


@dataclass(frozen=True, slots=True)
class InverseGaussian:
    """
    Inverse-Gaussian law with mean ``a`` and shape ``b``.

    The density is ``(b / (2 pi x^3))^(1/2) exp(-b (x - a)^2 / (2 a^2 x))`` on ``x > 0``,
    which is ``scipy.stats.invgauss(mu=a / b, scale=b)``.

    :ivar a: Mean.
    :ivar b: Shape.
    """

    a: float
    b: float

    def __post_init__(self):
        """Validate the parameters."""
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"Inverse-Gaussian parameters must be positive, got a={self.a}, b={self.b}")

    @property
    def law(self) -> Any:
        """
        Get the matching frozen scipy distribution.

        :return: ``invgauss(mu=a / b, scale=b)``.
        """
        return stats.invgauss(mu=self.a / self.b, scale=self.b)

    @property
    def mode(self) -> float:
        """
        Get the maximizer of the density.

        :return: ``a (sqrt(1 + 9 a^2 / (4 b^2)) - 3 a / (2 b))``.
        """
        ratio = self.a / self.b
        return self.a * (math.sqrt(1.0 + 2.25 * ratio * ratio) - 1.5 * ratio)

    def logpdf(self, x: FloatArray | float) -> FloatArray:
        """Log density from the closed form; ``-inf`` off ``(0, inf)``."""
        x = np.asarray(x, dtype=float)
        positive = x > 0.0
        safe = np.where(positive, x, 1.0)
        value = 0.5 * np.log(self.b / (2.0 * math.pi * safe**3)) - self.b * (safe - self.a) ** 2 / (
            2.0 * self.a**2 * safe
        )
        return np.where(positive, value, -np.inf)

    def pdf(self, x: FloatArray | float) -> FloatArray:
        """Density from the closed form."""
        return np.exp(self.logpdf(x))

    def cdf(self, x: FloatArray | float) -> FloatArray:
        """Distribution function."""
        return self.law.cdf(x)

    def sf(self, x: FloatArray | float) -> FloatArray:
        """Upper tail ``P(sigma > x)``."""
        return self.law.sf(x)

    def sample(self, rng: np.random.Generator, size: int | tuple[int, ...]) -> FloatArray:
        """
        Draw scales.

        :param rng: Random stream.

        :param size: Output shape.

        :return: Positive draws.
        """
        return np.asarray(self.law.rvs(size=size, random_state=rng), dtype=float)

    def log_mass(self, lower: float, upper: float) -> float:
        """
        Log probability of ``[lower, upper]``, accurate far in both tails.

        The density is integrated after division by its largest value on the cell, so
        cells whose mass underflows a double still get a finite logarithm.

        :param lower: Left end, at least 0.

        :param upper: Right end, possibly ``inf``.

        :return: ``log G([lower, upper])``; ``-inf`` for an empty cell.
        :raises ValueError: If ``lower`` is negative.

        """
        if lower < 0.0:
            raise ValueError(f"Scale cells live in (0, inf), got lower end {lower}")
        if upper <= lower:
            return -math.inf
        candidates = [float(self.logpdf(min(max(self.mode, lower), upper)))]
        if math.isfinite(upper):
            candidates.append(float(self.logpdf(upper)))
        if lower > 0.0:
            candidates.append(float(self.logpdf(lower)))
        anchor = max(candidates)
        if not math.isfinite(anchor):
            return -math.inf
        value, _ = integrate.quad(
            lambda s: math.exp(float(self.logpdf(s)) - anchor),
            lower,
            upper,
            epsabs=0.0,
            epsrel=_QUAD_RTOL,
            limit=_QUAD_LIMIT,
        )
        if value <= 0.0:
            return -math.inf
        return anchor + math.log(value)

    def mass(self, lower: float, upper: float) -> float:
        """Probability of ``[lower, upper]``."""
        return math.exp(self.log_mass(lower, upper))

    def tail_report(self, **kwargs) -> "TailReport":
        """Run :func:`tail_report` on this law."""
        return tail_report(self, **kwargs)


def inverse_gaussian_ops(a: float, b: float) -> InverseGaussian:
    """
    Inverse-Gaussian law exposing density, distribution function, sampler and tail report.

    :param a: Mean.

    :param b: Shape.

    :return: The law.
    """
    return InverseGaussian(a, b)


@dataclass(frozen=True, slots=True)
class ScalePriorSpec:
    """
    Prior on the component scales, with the tail constants its law satisfies.

    The inverse-Gaussian law satisfies the upper tail ``exp(-a1 x^b1)``, the lower tail
    ``exp(-a2 x^b2)`` and the small-ball law ``x^b3 t^b4 exp(-a3 x)``. A Dirichlet process
    over it inherits ``a4 = a1`` and ``a5 = a2`` with ``b7 = 0``.

    :ivar kind: Inverse-Gaussian or Dirichlet process.
    :ivar a: Mean of the inverse-Gaussian (base) law.
    :ivar b: Shape of the inverse-Gaussian (base) law.
    :ivar alpha_sigma: Concentration of the Dirichlet process, ``None`` otherwise.
    """

    kind: ScalePriorKind = ScalePriorKind.INVERSE_GAUSSIAN
    a: float = 1.0
    b: float = 1.0
    alpha_sigma: float | None = None

    def __post_init__(self):
        """Validate the spec."""
        InverseGaussian(self.a, self.b)
        if self.kind is ScalePriorKind.DIRICHLET_PROCESS:
            if self.alpha_sigma is None or not self.alpha_sigma > 0.0:
                raise ValueError(
                    f"A Dirichlet process needs a positive concentration, got {self.alpha_sigma}"
                )
        elif self.alpha_sigma is not None:
            raise ValueError("alpha_sigma only applies to the Dirichlet process kind")

    @classmethod
    def inverse_gaussian(cls, a: float = 1.0, b: float = 1.0) -> "ScalePriorSpec":
        """Fixed inverse-Gaussian scale prior."""
        return cls(ScalePriorKind.INVERSE_GAUSSIAN, a, b)

    @classmethod
    def dirichlet_process(
        cls, alpha_sigma: float, a: float = 1.0, b: float = 1.0
    ) -> "ScalePriorSpec":
        """Dirichlet process with inverse-Gaussian base measure."""
        return cls(ScalePriorKind.DIRICHLET_PROCESS, a, b, alpha_sigma)

    @property
    def base(self) -> InverseGaussian:
        """
        Get the inverse-Gaussian law, the base measure for the Dirichlet process kind.

        :return: The law.
        """
        return InverseGaussian(self.a, self.b)

    @property
    def a1(self) -> float:
        """Upper-tail rate ``b / (2 a^2)``."""
        return self.b / (2.0 * self.a**2)

    @property
    def a2(self) -> float:
        """Lower-tail rate ``b / 4``."""
        return self.b / 4.0

    @property
    def a3(self) -> float:
        """Small-ball rate ``b / 2``."""
        return self.b / 2.0

    @property
    def b1(self) -> float:
        """Upper-tail power."""
        return 1.0

    @property
    def b2(self) -> float:
        """Lower-tail power."""
        return 1.0

    @property
    def b3(self) -> float:
        """Small-ball power of ``x``."""
        return 1.0

    @property
    def b4(self) -> float:
        """Small-ball power of ``t``."""
        return 1.0

    @property
    def a4(self) -> float | None:
        """Upper-tail rate of the random measure, Dirichlet process kind only."""
        return self.a1 if self.kind is ScalePriorKind.DIRICHLET_PROCESS else None

    @property
    def a5(self) -> float | None:
        """Lower-tail rate of the random measure, Dirichlet process kind only."""
        return self.a2 if self.kind is ScalePriorKind.DIRICHLET_PROCESS else None

    @property
    def b7(self) -> float | None:
        """Power of ``J`` in the dyadic-ladder bound, Dirichlet process kind only."""
        return 0.0 if self.kind is ScalePriorKind.DIRICHLET_PROCESS else None

    def constants(self) -> dict[str, float]:
        """
        Get the tail constants that apply to this kind.

        :return: Mapping from constant name to value.
        """
        names = ["a1", "a2", "a3", "b1", "b2", "b3", "b4", "a4", "a5", "b7"]
        values = {name: getattr(self, name) for name in names}
        return {name: float(v) for name, v in values.items() if v is not None}


@dataclass(frozen=True, slots=True)
class TailReport:
    """
    Numerical check of the three tail conditions of an inverse-Gaussian law.

    Upper and lower constants are fitted as the largest ratio on ``x <= fit_upper`` and
    then verified on the whole sweep. The small-ball constant is the smallest ratio over
    the ``(x, t)`` lattice; ``small_ball_exponent`` is the power of ``x`` the ratio
    actually follows.

    :ivar a: Mean of the law.
    :ivar b: Shape of the law.
    :ivar constants: Tail constants under test.
    :ivar upper_constant: Fitted ``C`` in ``G(sigma > x) <= C exp(-a1 x)``.
    :ivar upper_violations: Sweep points where the upper bound fails.
    :ivar lower_constant: Fitted ``C`` in ``G(sigma <= 1/x) <= C exp(-a2 x)``.
    :ivar lower_violations: Sweep points where the lower bound fails.
    :ivar small_ball_constant: Fitted ``c`` in ``G(1/x <= sigma <= (1+t)/x) >= c x t exp(-a3 x)``.
    :ivar small_ball_exponent: Fitted power of ``x`` in the small-ball mass ratio.
    :ivar x_range: Sweep range of ``x``.
    :ivar t_range: Sweep range of ``t``.
    :ivar fit_upper: Largest ``x`` used to fit the tail constants.
    """

    a: float
    b: float
    constants: dict[str, float] = field(repr=False)
    upper_constant: float
    upper_violations: int
    lower_constant: float
    lower_violations: int
    small_ball_constant: float
    small_ball_exponent: float
    x_range: tuple[float, float]
    t_range: tuple[float, float]
    fit_upper: float

    @property
    def passed(self) -> bool:
        """
        Whether all three conditions hold on the sweep.

        :return: ``True`` when no bound is violated and the small-ball constant is positive.
        """
        return (
            self.upper_violations == 0
            and self.lower_violations == 0
            and 0.0 < self.small_ball_constant < math.inf
        )

    def to_dict(self) -> dict:
        """Get a JSON-ready mapping of the report."""
        return {
            "a": self.a,
            "b": self.b,
            "constants": dict(self.constants),
            "upper_constant": self.upper_constant,
            "upper_violations": self.upper_violations,
            "lower_constant": self.lower_constant,
            "lower_violations": self.lower_violations,
            "small_ball_constant": self.small_ball_constant,
            "small_ball_exponent": self.small_ball_exponent,
            "x_range": list(self.x_range),
            "t_range": list(self.t_range),
            "fit_upper": self.fit_upper,
            "passed": self.passed,
        }


def _fit_and_count(log_ratio: FloatArray, xs: FloatArray, fit_upper: float) -> tuple[float, int]:
    log_c = float(np.max(log_ratio[xs <= fit_upper]))
    violations = int(np.sum(log_ratio > log_c + _VIOLATION_SLACK))
    return math.exp(log_c), violations


def tail_report(
    law: InverseGaussian,
    xs: FloatArray | None = None,
    ts: FloatArray | None = None,
    fit_upper: float = 10.0,
) -> TailReport:
    """
    Verify the upper-tail, lower-tail and small-ball conditions by deterministic quadrature.

    :param law: Inverse-Gaussian law.

    :param xs: Sweep of ``x >= 1``; defaults to 99 points on ``[1, 50]``.

    :param ts: Sweep of ``t`` in ``(0, 1)``; defaults to 12 geometric points on ``[1e-3, 0.9]``.

    :param fit_upper: Largest ``x`` used to fit the tail constants.

    :return: The report.
    :raises ValueError: If a sweep leaves its admissible range.

    """
    xs = np.linspace(1.0, 50.0, 99) if xs is None else np.asarray(xs, dtype=float)
    ts = np.geomspace(1e-3, 0.9, 12) if ts is None else np.asarray(ts, dtype=float)
    if xs.size == 0 or np.any(xs < 1.0):
        raise ValueError("The x sweep must be nonempty and lie in [1, inf)")
    if ts.size == 0 or np.any((ts <= 0.0) | (ts >= 1.0)):
        raise ValueError("The t sweep must be nonempty and lie in (0, 1)")
    spec = ScalePriorSpec.inverse_gaussian(law.a, law.b)

    log_upper = np.array([law.log_mass(x, math.inf) for x in xs]) + spec.a1 * xs
    upper_c, upper_bad = _fit_and_count(log_upper, xs, fit_upper)
    log_lower = np.array([law.log_mass(0.0, 1.0 / x) for x in xs]) + spec.a2 * xs
    lower_c, lower_bad = _fit_and_count(log_lower, xs, fit_upper)

    worst = np.empty(xs.size)
    for i, x in enumerate(xs):
        cells = np.array([law.log_mass(1.0 / x, (1.0 + t) / x) for t in ts])
        floor = spec.b3 * math.log(x) + spec.b4 * np.log(ts) - spec.a3 * x
        worst[i] = float(np.min(cells - floor))
    decay = fit_loglog_slope(xs, np.exp(worst - worst.max())).slope if xs.size > 1 else 0.0

    return TailReport(
        a=law.a,
        b=law.b,
        constants=spec.constants(),
        upper_constant=upper_c,
        upper_violations=upper_bad,
        lower_constant=lower_c,
        lower_violations=lower_bad,
        small_ball_constant=math.exp(float(worst.min())),
        small_ball_exponent=spec.b3 + decay,
        x_range=(float(xs.min()), float(xs.max())),
        t_range=(float(ts.min()), float(ts.max())),
        fit_upper=fit_upper,
    )
