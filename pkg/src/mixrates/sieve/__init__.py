"""
Sieves of finite signed Gaussian mixtures.

:class:`SieveSpec` fixes ``F_n(H, epsilon)`` for the location and location-scale
mixtures; :func:`sieve_membership` checks its clauses one by one; the explicit net of
:func:`net_log_cardinality` and :func:`round_to_net` bounds its entropy; and
:func:`mc_sieve_complement` estimates the prior mass outside it.
"""

__docformat__ = "restructuredtext"

from mixrates.sieve._complement import (
    ClauseBound,
    ClauseEstimate,
    ComplementReport,
    complement_bounds,
    mc_sieve_complement,
)
from mixrates.sieve._membership import ClauseCheck, SieveVerdict, atom_columns, sieve_membership
from mixrates.sieve._net import (
    CoveringCheck,
    NetCardinality,
    RoundingBudget,
    covariate_window,
    net_constant,
    net_covering_check,
    net_log_cardinality,
    random_sieve_member,
    round_to_net,
)
from mixrates.sieve._spec import (
    CLAUSE_BIG_COUNT,
    CLAUSE_HIGH_SCALE_MASS,
    CLAUSE_LOW_SCALE_MASS,
    CLAUSE_SIGMA_RANGE,
    CLAUSE_SMALL_MASS,
    CLAUSE_TOTAL_MASS,
    NetSpec,
    SieveSpec,
    sieve_kind_for,
)

__all__ = [
    "CLAUSE_BIG_COUNT",
    "CLAUSE_HIGH_SCALE_MASS",
    "CLAUSE_LOW_SCALE_MASS",
    "CLAUSE_SIGMA_RANGE",
    "CLAUSE_SMALL_MASS",
    "CLAUSE_TOTAL_MASS",
    "ClauseBound",
    "ClauseCheck",
    "ClauseEstimate",
    "ComplementReport",
    "CoveringCheck",
    "NetCardinality",
    "NetSpec",
    "RoundingBudget",
    "SieveSpec",
    "SieveVerdict",
    "atom_columns",
    "complement_bounds",
    "covariate_window",
    "mc_sieve_complement",
    "net_constant",
    "net_covering_check",
    "net_log_cardinality",
    "random_sieve_member",
    "round_to_net",
    "sieve_kind_for",
    "sieve_membership",
]
