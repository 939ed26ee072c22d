"""
Test suite for sieve parameters and membership.

Validates that:
1. Sieve parameters derive the scale range, count limit and net lattices.
2. Location clauses fail in order on hand-built mixtures.
3. Location-scale clauses count only in-range scales and cap the tail masses.
"""

__docformat__ = "restructuredtext"

import math

import numpy as np
import pytest

from mixrates._enums import MixtureKind
from mixrates.mixture import FiniteGaussMixture
from mixrates.priors import SignedAtomMeasure
from mixrates.sieve import (
    CLAUSE_BIG_COUNT,
    CLAUSE_HIGH_SCALE_MASS,
    CLAUSE_LOW_SCALE_MASS,
    CLAUSE_SIGMA_RANGE,
    CLAUSE_SMALL_MASS,
    CLAUSE_TOTAL_MASS,
    NetSpec,
    SieveSpec,
    atom_columns,
    sieve_kind_for,
    sieve_membership,
)


def _shared(weights, sigma=0.5):
    weights = np.asarray(weights, dtype=float)
    return FiniteGaussMixture(weights, np.zeros(weights.size), np.full(weights.size, sigma))


class TestSieveSpec:
    """Derived quantities."""

    def test_derived(self, location_sieve):
        """Scale range, count limit and gamma."""
        assert location_sieve.scale_lower == pytest.approx(0.01)
        assert location_sieve.scale_upper == pytest.approx(100.0)
        assert location_sieve.small_weight == pytest.approx(0.01)
        assert location_sieve.count_limit == pytest.approx(25.0 / math.log(100.0))
        assert location_sieve.max_atoms == 5
        assert location_sieve.gamma == pytest.approx(math.log(4.0) / math.log(100.0))

    def test_kinds(self):
        """Location families share a sieve, the others use the location-scale sieve."""
        assert sieve_kind_for(MixtureKind.COVARIATE_LOCATION) is MixtureKind.LOCATION
        assert sieve_kind_for(MixtureKind.HYBRID) is MixtureKind.LOCATION_SCALE
        assert SieveSpec(100, 1.0, 0.5, kind=MixtureKind.HYBRID).kind is MixtureKind.LOCATION_SCALE

    @pytest.mark.parametrize(
        ("kwargs", "match"),
        [
            ({"n": 1, "H": 1.0, "epsilon": 0.5}, "n must be at least 2"),
            ({"n": 100, "H": 0.0, "epsilon": 0.5}, "H must lie"),
            ({"n": 100, "H": 1.0, "epsilon": 0.1}, "epsilon must lie"),
            ({"n": 100, "H": 1.0, "epsilon": 1.5}, "epsilon must lie"),
            ({"n": 100, "H": 1.0, "epsilon": 0.5, "b1": 0.0}, "b1 and b2"),
        ],
    )
    def test_invalid(self, kwargs, match):
        """Parameters outside their ranges are rejected."""
        with pytest.raises(ValueError, match=match):
            SieveSpec(**kwargs)

    def test_net_lattices(self, location_sieve):
        """Steps n^-3/2 / H and n^(-3/2 - 1/b2), radius n^(1/b1) sqrt(6 log n)."""
        net = NetSpec.from_sieve(location_sieve)
        assert net.weight_step == pytest.approx(1e-3)
        assert net.location_step == pytest.approx(1e-5)
        assert net.scale_step == net.location_step
        assert net.radius == pytest.approx(100.0 * math.sqrt(6.0 * math.log(100.0)))
        assert net.weight_cap == 100.0
        assert NetSpec.from_sieve(location_sieve, refine=18.0).weight_step == pytest.approx(1e-3 / 18.0)
        with pytest.raises(ValueError, match="refine must be at least 1"):
            NetSpec.from_sieve(location_sieve, refine=0.5)


class TestLocationMembership:
    """Clauses of the location sieve."""

    def test_member(self, location_sieve):
        """Two big weights and one small weight with an admissible scale."""
        verdict = sieve_membership(_shared([1.0, -2.0, 0.005]), location_sieve)
        assert verdict
        assert verdict.failed_clause is None
        names = [c.name for c in verdict.checks]
        assert names == [CLAUSE_SIGMA_RANGE, CLAUSE_TOTAL_MASS, CLAUSE_SMALL_MASS, CLAUSE_BIG_COUNT]
        assert verdict.to_dict()["clauses"][1]["value"] == pytest.approx(3.005)

    @pytest.mark.parametrize(
        ("weights", "sigma", "failed"),
        [
            ([1.0], 0.01, CLAUSE_SIGMA_RANGE),
            ([60.0, 50.0], 0.5, CLAUSE_TOTAL_MASS),
            ([0.01] * 60, 0.5, CLAUSE_SMALL_MASS),
            ([1.0] * 6, 0.5, CLAUSE_BIG_COUNT),
        ],
    )
    def test_failures(self, location_sieve, weights, sigma, failed):
        """The first failing clause is named; the scale range is open on the left."""
        verdict = sieve_membership(_shared(weights, sigma), location_sieve)
        assert not verdict.member
        assert verdict.failed_clause == failed

    def test_one_scale(self, location_sieve):
        """The location sieve needs a shared scale."""
        mixture = FiniteGaussMixture([1.0, 1.0], [0.0, 1.0], [0.5, 0.6])
        with pytest.raises(ValueError, match="one scale shared"):
            sieve_membership(mixture, location_sieve)

    def test_realizations(self, location_sieve):
        """Location sites take the shared scale from the caller."""
        measure = SignedAtomMeasure([1.0, -0.5], [0.0, 2.0], 0.01)
        with pytest.raises(ValueError, match="shared sigma"):
            sieve_membership(measure, location_sieve)
        assert sieve_membership(measure, location_sieve, sigma=0.5).member
        u, mu, scales = atom_columns(measure, 0.5)
        np.testing.assert_array_equal(scales, 0.5)

    def test_empty(self, location_sieve, location_scale_sieve):
        """The empty measure belongs to both sieves."""
        empty = SignedAtomMeasure.empty(0.01)
        assert sieve_membership(empty, location_sieve).member
        assert sieve_membership(empty, location_scale_sieve).member


class TestLocationScaleMembership:
    """Clauses of the location-scale sieve."""

    def test_clause_order(self, location_scale_sieve):
        """Total, count, small, low and high."""
        verdict = sieve_membership(_shared([1.0]), location_scale_sieve)
        assert [c.name for c in verdict.checks] == [
            CLAUSE_TOTAL_MASS,
            CLAUSE_BIG_COUNT,
            CLAUSE_SMALL_MASS,
            CLAUSE_LOW_SCALE_MASS,
            CLAUSE_HIGH_SCALE_MASS,
        ]

    def test_out_of_range_not_counted(self, location_scale_sieve):
        """Big weights outside the scale range do not count toward the limit."""
        mixture = FiniteGaussMixture(
            np.full(8, 0.05), np.zeros(8), np.array([0.005] * 4 + [200.0] * 4)
        )
        verdict = sieve_membership(mixture, location_scale_sieve)
        assert verdict.checks[1].value == 0
        assert verdict.member

    @pytest.mark.parametrize(
        ("scale", "failed"), [(0.005, CLAUSE_LOW_SCALE_MASS), (0.01, CLAUSE_LOW_SCALE_MASS), (200.0, CLAUSE_HIGH_SCALE_MASS)]
    )
    def test_tail_mass(self, location_scale_sieve, scale, failed):
        """Mass beyond the scale range is capped by epsilon on each side."""
        mixture = FiniteGaussMixture([0.6], [0.0], [scale])
        assert sieve_membership(mixture, location_scale_sieve).failed_clause == failed

