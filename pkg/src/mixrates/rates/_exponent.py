"""Contraction-rate exponents of the mixture priors."""

__docformat__ = "restructuredtext"
__all__ = ["DominanceCheck", "dominance_check", "epsilon_n", "rate_exponent"]

import math
from dataclasses import dataclass
from fractions import Fraction

from mixrates._enums import MixtureKind
from mixrates.rates._spec import TABLE_COLUMNS, Number, RateResult, RateSpec

TERM_LOCATION_LIGHT = "2β/(3β+1)"
TERM_MOMENT = "2β/(2β+1+2β/p)"
TERM_LOCATION_SCALE_LIGHT = "2β/(3β+2)"
TERM_LOCATION_SCALE_HEAVY = "β/(β+1)"
TERM_HYBRID_MIDDLE = "p/(p+1)"
TERM_HYBRID_HEAVY = "2β/(2β+1)"


def _exact(x: Number) -> Number:
    if isinstance(x, bool):
        raise ValueError("Booleans are not rates")
    if isinstance(x, int | Fraction):
        return Fraction(x)
    return float(x)


def _moment_ratio(b: Number, p: Number) -> Number:
    # 2β/p, zero for p = inf
    if isinstance(p, float) and math.isinf(p):
        return Fraction(0) if isinstance(b, Fraction) else 0.0
    return 2 * b / p


def _pick(
    kind: MixtureKind,
    b: Number,
    p: Number,
    b7: float,
) -> tuple[Number, Number, str]:
    moment = 2 * b + 1 + _moment_ratio(b, p)
    if kind is MixtureKind.COVARIATE_LOCATION:
        q = 2 * b / (3 * b + 1)
        return q, 2 - q, TERM_LOCATION_LIGHT
    if kind is MixtureKind.LOCATION:
        if p < 2:
            q = 2 * b / (3 * b + 1)
            return q, 2 - q, TERM_LOCATION_LIGHT
        return 2 * b / moment, 2 - 3 * b / moment, TERM_MOMENT
    if kind is MixtureKind.LOCATION_SCALE:
        if p >= 2 * b:
            return b / (b + 1), 4 - 2 * b / (b + 1), TERM_LOCATION_SCALE_HEAVY
        light, middle = 2 * b / (3 * b + 2), 2 * b / moment
        if middle >= light:
            return middle, 4 - 4 * b / moment, TERM_MOMENT
        return light, 4 - 8 * b / (3 * b + 2), TERM_LOCATION_SCALE_LIGHT
    if p >= 2 * b:
        q = 2 * b / (2 * b + 1)
        return q, 4 - 2 * b * (4 - max(b7, 3.0)) / (2 * b + 1), TERM_HYBRID_HEAVY
    light = 2 * b / (3 * b + 1)
    middle = p / (p + 1)
    if middle >= light:
        return middle, 4 - middle, TERM_HYBRID_MIDDLE
    return light, 4 - 6 * b / (3 * b + 1), TERM_LOCATION_LIGHT


def rate_exponent(spec: RateSpec) -> RateResult:
    """
    Get ``q`` and ``t`` of ``epsilon_n^2 = n^-q (log n)^t`` for a prior family.

    Where two terms compete the larger exponent wins, which splits the table at
    ``p = 2 beta / (beta + 1)``; at every threshold the right-hand regime applies.

    - Location: ``2β/(3β+1)`` for ``p < 2``, else ``2β/(2β+1+2β/p)``.
    - Location-scale: ``2β/(3β+2)`` or ``2β/(2β+1+2β/p)`` for ``p < 2β``, else ``β/(β+1)``.
    - Hybrid: ``2β/(3β+1)`` or ``p/(p+1)`` for ``p < 2β``, else ``2β/(2β+1)``.
    - Covariate location: ``2β/(3β+1)`` for every ``p``.

    :param spec: Family and regularity.

    :return: The rate.
    """
    b, p = _exact(spec.beta), _exact(spec.p)
    q, t, term = _pick(spec.kind, b, p, spec.b7)
    exact = q if isinstance(q, Fraction) else None
    return RateResult(
        kind=spec.kind,
        q=float(q),
        log_power=float(t),
        regime=TABLE_COLUMNS[spec.column],
        term=term,
        exact_q=exact,
    )


def epsilon_n(n: float, spec: RateSpec, constant: float = 1.0) -> float:
    """
    Evaluate the squared rate ``C n^-q (log n)^t``.

    :param n: Sample size, above 1.

    :param spec: Family and regularity.

    :param constant: Leading constant ``C``.

    :return: ``epsilon_n^2``.
    :raises ValueError: If ``n <= 1``.

    """
    if n <= 1:
        raise ValueError(f"n must exceed 1, got {n}")
    result = rate_exponent(spec)
    return constant * n ** (-result.q) * math.log(n) ** result.log_power


@dataclass(frozen=True, slots=True)
class DominanceCheck:
    """
    Exponents of the three main families at one ``(beta, p)``.

    :ivar beta: Hölder order.
    :ivar p: Moment index.
    :ivar location: ``q`` of the location prior.
    :ivar location_scale: ``q`` of the location-scale prior.
    :ivar hybrid: ``q`` of the hybrid prior.
    """

    beta: float
    p: float
    location: float
    location_scale: float
    hybrid: float

    @property
    def ordered(self) -> bool:
        """
        Whether ``hybrid >= location >= location_scale`` up to rounding.

        :return: The ordering verdict.
        """
        tol = 1e-12
        return self.hybrid >= self.location - tol and self.location >= self.location_scale - tol


def dominance_check(beta: Number, p: Number) -> DominanceCheck:
    """
    Compare the hybrid, location and location-scale exponents at ``(beta, p)``.

    :param beta: Hölder order.

    :param p: Moment index.

    :return: The three exponents.
    """
    q = {
        kind: rate_exponent(RateSpec(kind, beta, p)).q
        for kind in (MixtureKind.LOCATION, MixtureKind.LOCATION_SCALE, MixtureKind.HYBRID)
    }
    return DominanceCheck(
        beta=float(beta),
        p=float(p),
        location=q[MixtureKind.LOCATION],
        location_scale=q[MixtureKind.LOCATION_SCALE],
        hybrid=q[MixtureKind.HYBRID],
    )
