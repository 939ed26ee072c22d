"""Sieve parameters and the lattice steps of its explicit net."""

__docformat__ = "restructuredtext"
__all__ = [
    "CLAUSE_BIG_COUNT",
    "CLAUSE_HIGH_SCALE_MASS",
    "CLAUSE_LOW_SCALE_MASS",
    "CLAUSE_SIGMA_RANGE",
    "CLAUSE_SMALL_MASS",
    "CLAUSE_TOTAL_MASS",
    "NetSpec",
    "SieveSpec",
    "sieve_kind_for",
]

import math
from dataclasses import dataclass

from mixrates._enums import MixtureKind

CLAUSE_SIGMA_RANGE = "sigma_range"
CLAUSE_TOTAL_MASS = "total_mass"
CLAUSE_SMALL_MASS = "small_mass"
CLAUSE_BIG_COUNT = "big_count"
CLAUSE_LOW_SCALE_MASS = "low_scale_mass"
CLAUSE_HIGH_SCALE_MASS = "high_scale_mass"

_SIEVE_KINDS = {
    MixtureKind.LOCATION: MixtureKind.LOCATION,
    MixtureKind.COVARIATE_LOCATION: MixtureKind.LOCATION,
    MixtureKind.LOCATION_SCALE: MixtureKind.LOCATION_SCALE,
    MixtureKind.HYBRID: MixtureKind.LOCATION_SCALE,
}


def sieve_kind_for(kind: MixtureKind) -> MixtureKind:
    """
    Get the sieve used by a prior family.

    :param kind: Prior family.

    :return: ``LOCATION`` for the location families, ``LOCATION_SCALE`` otherwise.
    """
    return _SIEVE_KINDS[MixtureKind(kind)]


@dataclass(frozen=True, slots=True)
class SieveSpec:
    """
    Parameters of the sieve ``F_n(H, epsilon)``.

    The location sieve holds ``f_{M, sigma}`` with ``n^(-1/b2) < sigma <= n^(1/b1)``,
    ``sum |u_i| <= n``, ``sum |u_i| 1{|u_i| <= 1/n} <= epsilon`` and at most
    ``H n epsilon^2 / log n`` weights above ``1/n``. The location-scale sieve drops the
    global scale clause, counts only the big weights whose scale lies in the range, and
    caps the mass sitting below and above the range by ``epsilon`` each.

    :ivar n: Sample size, at least 2.
    :ivar H: Count factor in ``(0, 1]``.
    :ivar epsilon: Radius in ``(n^-1/2, 1]``.
    :ivar b1: Upper-tail exponent of the scale prior.
    :ivar b2: Lower-tail exponent of the scale prior.
    :ivar kind: Location or location-scale.
    """

    n: int
    H: float
    epsilon: float
    b1: float = 1.0
    b2: float = 1.0
    kind: MixtureKind = MixtureKind.LOCATION

    def __post_init__(self):
        """Validate the parameters and normalize the kind."""
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not 0.0 < self.H <= 1.0:
            raise ValueError(f"H must lie in (0, 1], got {self.H}")
        if not self.n**-0.5 < self.epsilon <= 1.0:
            raise ValueError(
                f"epsilon must lie in (n^-1/2, 1] = ({self.n**-0.5:.4g}, 1], got {self.epsilon}"
            )
        if self.b1 <= 0.0 or self.b2 <= 0.0:
            raise ValueError(f"b1 and b2 must be positive, got {self.b1} and {self.b2}")
        object.__setattr__(self, "kind", sieve_kind_for(self.kind))

    @property
    def scale_lower(self) -> float:
        """Excluded lower end ``n^(-1/b2)`` of the scale range."""
        return self.n ** (-1.0 / self.b2)

    @property
    def scale_upper(self) -> float:
        """Included upper end ``n^(1/b1)`` of the scale range."""
        return self.n ** (1.0 / self.b1)

    @property
    def small_weight(self) -> float:
        """Weights at most ``1/n`` are small."""
        return 1.0 / self.n

    @property
    def count_limit(self) -> float:
        """
        Get ``H n epsilon^2 / log n``, the largest admissible number of big weights.

        :return: The real-valued limit.
        """
        return self.H * self.n * self.epsilon**2 / math.log(self.n)

    @property
    def max_atoms(self) -> int:
        """Integer part of :attr:`count_limit`."""
        return math.floor(self.count_limit)

    @property
    def gamma(self) -> float:
        """
        Get ``gamma`` with ``epsilon = n^(-gamma/2)``.

        :return: The exponent, in ``[0, 1)``.
        """
        return -2.0 * math.log(self.epsilon) / math.log(self.n)


@dataclass(frozen=True, slots=True)
class NetSpec:
    """
    Lattices of the explicit net over the sieve.

    :ivar weight_step: Weight lattice step ``n^(-3/2) / H``.
    :ivar location_step: Location lattice step ``n^(-3/2 - 1/b2)``.
    :ivar scale_step: Scale lattice step ``n^(-3/2 - 1/b2)``.
    :ivar radius: Half width ``n^(1/b1) sqrt(6 log n)`` of the window around each covariate.
    :ivar weight_cap: Largest admissible ``|u|``, equal to ``n``.
    """

    weight_step: float
    location_step: float
    scale_step: float
    radius: float
    weight_cap: float

    def __post_init__(self):
        """Validate the steps."""
        if min(self.weight_step, self.location_step, self.scale_step, self.radius) <= 0.0:
            raise ValueError("Net steps and radius must be positive")

    @classmethod
    def from_sieve(cls, spec: SieveSpec, refine: float = 1.0) -> "NetSpec":
        """
        Derive the lattices from the sieve parameters.

        :param spec: Sieve.

        :param refine: Factor dividing all three lattice steps.

        :return: The net lattices.
        """
        if refine < 1.0:
            raise ValueError(f"refine must be at least 1, got {refine}")
        n = float(spec.n)
        fine = n ** (-1.5 - 1.0 / spec.b2) / refine
        return cls(
            weight_step=n**-1.5 / spec.H / refine,
            location_step=fine,
            scale_step=fine,
            radius=n ** (1.0 / spec.b1) * math.sqrt(6.0 * math.log(n)),
            weight_cap=n,
        )
