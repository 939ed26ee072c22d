"""Clause-by-clause membership in the location and location-scale sieves."""

__docformat__ = "restructuredtext"
__all__ = ["ClauseCheck", "SieveVerdict", "atom_columns", "sieve_membership"]

from dataclasses import dataclass

import numpy as np

from mixrates._enums import MixtureKind
from mixrates.custom_types import FloatArray
from mixrates.mixture import FiniteGaussMixture
from mixrates.priors import SignedAtomMeasure
from mixrates.sieve._spec import (
    CLAUSE_BIG_COUNT,
    CLAUSE_HIGH_SCALE_MASS,
    CLAUSE_LOW_SCALE_MASS,
    CLAUSE_SIGMA_RANGE,
    CLAUSE_SMALL_MASS,
    CLAUSE_TOTAL_MASS,
    SieveSpec,
)


@dataclass(frozen=True, slots=True)
class ClauseCheck:
    """
    One evaluated sieve clause.

    :ivar name: Clause name.
    :ivar value: Evaluated quantity.
    :ivar limit: Admissible upper end; for the scale range, ``n^(1/b1)``.
    :ivar holds: Whether the clause is satisfied.
    """

    name: str
    value: float
    limit: float
    holds: bool


@dataclass(frozen=True, slots=True)
class SieveVerdict:
    """
    Membership verdict.

    :ivar member: Whether every clause holds.
    :ivar failed_clause: First violated clause in evaluation order, or ``None``.
    :ivar checks: All clauses in evaluation order.
    """

    member: bool
    failed_clause: str | None
    checks: tuple[ClauseCheck, ...]

    def __bool__(self) -> bool:
        """Return :attr:`member`."""
        return self.member

    def to_dict(self) -> dict:
        """
        Convert to plain types for JSON.

        :return: Dictionary with the verdict and one entry per clause.
        """
        return {
            "member": self.member,
            "failed_clause": self.failed_clause,
            "clauses": [
                {"name": c.name, "value": c.value, "limit": c.limit, "holds": c.holds}
                for c in self.checks
            ],
        }


def atom_columns(
    m: FiniteGaussMixture | SignedAtomMeasure, sigma: float | None = None
) -> tuple[FloatArray, FloatArray, FloatArray | None]:
    """
    Extract ``(u, mu, sigma)`` columns from a mixture or a realization.

    :param m: Mixture, or realization with or without scales.

    :param sigma: Shared scale for realizations without scales.

    :return: Weights, locations and scales; scales are ``None`` only for an empty
        scale-free realization without ``sigma``.
    :raises ValueError: If a nonempty realization has neither scales nor ``sigma``.

    """
    if isinstance(m, FiniteGaussMixture):
        return m.weights, m.locations, m.scales
    if m.scales is not None:
        return m.masses, m.locations, m.scales
    if sigma is not None:
        return m.masses, m.locations, np.full(len(m), float(sigma))
    if len(m):
        raise ValueError("Location sites need a shared sigma to be checked against the sieve")
    return m.masses, m.locations, None


def _shared_scale(scales: FloatArray | None, sigma: float | None) -> float | None:
    if scales is None or scales.size == 0:
        return sigma
    if not np.allclose(scales, scales[0], rtol=1e-12, atol=0.0):
        raise ValueError("The location sieve needs one scale shared by every atom")
    return float(scales[0])


def sieve_membership(
    m: FiniteGaussMixture | SignedAtomMeasure,
    spec: SieveSpec,
    sigma: float | None = None,
) -> SieveVerdict:
    """
    Evaluate every sieve clause on a finite signed mixture.

    Location clauses, in order: scale range (strict lower end), total mass, small-weight
    mass, big-weight count. Location-scale clauses, in order: total mass, count of big
    weights with scale in range, small-weight mass, mass below the range, mass above it.
    The empty measure is a member of both sieves.

    :param m: Mixture or realization.

    :param spec: Sieve.

    :param sigma: Shared scale for realizations without scales.

    :return: The verdict naming the first violated clause.
    :raises ValueError: If the atom data are not finite or the location sieve sees
        more than one scale.

    """
    u, _, scales = atom_columns(m, sigma)
    if not np.all(np.isfinite(u)) or (scales is not None and not np.all(np.isfinite(scales))):
        raise ValueError("Atom data must be finite")
    a = np.abs(u)
    lo, hi = spec.scale_lower, spec.scale_upper
    big = a > spec.small_weight
    checks: list[ClauseCheck] = []
    total = float(np.sum(a))
    small = float(np.sum(a[~big]))

    if spec.kind is MixtureKind.LOCATION:
        shared = _shared_scale(scales, sigma)
        if shared is not None:
            checks.append(ClauseCheck(CLAUSE_SIGMA_RANGE, shared, hi, lo < shared <= hi))
        checks.append(ClauseCheck(CLAUSE_TOTAL_MASS, total, float(spec.n), total <= spec.n))
        checks.append(ClauseCheck(CLAUSE_SMALL_MASS, small, spec.epsilon, small <= spec.epsilon))
        count = int(np.count_nonzero(big))
        checks.append(
            ClauseCheck(CLAUSE_BIG_COUNT, count, spec.count_limit, count <= spec.count_limit)
        )
    else:
        s = scales if scales is not None else np.empty(0)
        in_range = (s > lo) & (s <= hi)
        count = int(np.count_nonzero(big & in_range))
        low = float(np.sum(a[s <= lo]))
        high = float(np.sum(a[s > hi]))
        checks.extend(
            [
                ClauseCheck(CLAUSE_TOTAL_MASS, total, float(spec.n), total <= spec.n),
                ClauseCheck(CLAUSE_BIG_COUNT, count, spec.count_limit, count <= spec.count_limit),
                ClauseCheck(CLAUSE_SMALL_MASS, small, spec.epsilon, small <= spec.epsilon),
                ClauseCheck(CLAUSE_LOW_SCALE_MASS, low, spec.epsilon, low <= spec.epsilon),
                ClauseCheck(CLAUSE_HIGH_SCALE_MASS, high, spec.epsilon, high <= spec.epsilon),
            ]
        )

    failed = next((c.name for c in checks if not c.holds), None)
    return SieveVerdict(failed is None, failed, tuple(checks))
