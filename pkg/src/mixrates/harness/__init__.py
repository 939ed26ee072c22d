"""
Experiment harness.

Catalogs of test functions and design distributions, YAML experiment configs, sweeps
of the approximation schemes with frontier fits, invariant validators and the
``mixrates`` command line.
"""

__docformat__ = "restructuredtext"

from mixrates.harness._io import canonical_json, config_hash, jsonable, write_csv, write_json
from mixrates.harness.catalog import (
    DesignDistribution,
    TestFunction,
    builtin_designs,
    builtin_test_functions,
    design,
    empirical_moment,
    gaussian_bump,
    heavy_tail,
    holder_quotient,
    moment_trend,
    pareto_design,
    tent,
    test_function,
    weierstrass,
    weierstrass_terms,
)
from mixrates.harness.config import ExperimentConfig, default_resolution_grid, load_mapping
from mixrates.harness.sweep import (
    SWEEP_COLUMNS,
    FrontierComparison,
    FrontierFit,
    SweepCell,
    SweepResult,
    SweepRow,
    compare_frontiers,
    fit_frontier,
    predicted_count_slope,
    predicted_frontier_exponent,
    run_cell,
    run_sweep,
    write_sweep,
)
from mixrates.harness.validators import (
    VALIDATOR_GROUPS,
    InvariantResult,
    ValidationReport,
    run_validators,
    validate_dp,
    validate_ig,
    validate_kernels,
    validate_rates,
    validate_sga,
    validate_sieve,
)

__all__ = [
    "SWEEP_COLUMNS",
    "VALIDATOR_GROUPS",
    "DesignDistribution",
    "ExperimentConfig",
    "FrontierComparison",
    "FrontierFit",
    "InvariantResult",
    "SweepCell",
    "SweepResult",
    "SweepRow",
    "TestFunction",
    "ValidationReport",
    "builtin_designs",
    "builtin_test_functions",
    "canonical_json",
    "compare_frontiers",
    "config_hash",
    "default_resolution_grid",
    "design",
    "empirical_moment",
    "fit_frontier",
    "gaussian_bump",
    "heavy_tail",
    "holder_quotient",
    "jsonable",
    "load_mapping",
    "moment_trend",
    "pareto_design",
    "predicted_count_slope",
    "predicted_frontier_exponent",
    "run_cell",
    "run_sweep",
    "run_validators",
    "tent",
    "test_function",
    "validate_dp",
    "validate_ig",
    "validate_kernels",
    "validate_rates",
    "validate_sga",
    "validate_sieve",
    "weierstrass",
    "weierstrass_terms",
    "write_csv",
    "write_json",
    "write_sweep",
]
