"""
Command-line entry point.

Subcommands write CSV data and JSON verdicts under ``--out``; stdout carries progress
lines only under ``--verbose``.
"""

__docformat__ = "restructuredtext"
__all__ = ["build_parser", "main"]

import argparse
import math
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

import numpy as np

from mixrates._constants import (
    DEFAULT_KERNEL_HALF_RANGE,
    DEFAULT_KERNEL_NODES,
    LOG_SWEEP,
    MIN_COMPLEMENT_TRIALS,
)
from mixrates._enums import MixtureKind
from mixrates._errors import QuadratureError, WindowError
from mixrates.harness._io import config_hash, write_csv, write_json
from mixrates.harness.config import ExperimentConfig, load_mapping
from mixrates.harness.sweep import run_sweep, write_sweep
from mixrates.harness.validators import VALIDATOR_GROUPS, run_validators
from mixrates.kernels import build_cutoff, default_x_grid, invert_to_space
from mixrates.priors import LocationBaseSpec, ScalePriorSpec, sample_prior
from mixrates.rates import MAIN_KINDS, render_table, symbolic_table
from mixrates.sieve import (
    SieveSpec,
    mc_sieve_complement,
    net_covering_check,
    net_log_cardinality,
)

_PRIOR_KINDS = (MixtureKind.LOCATION, MixtureKind.LOCATION_SCALE, MixtureKind.HYBRID)
_SIEVE_KINDS = (MixtureKind.LOCATION, MixtureKind.LOCATION_SCALE)


def _trial_count(text: str) -> int:
    try:
        trials = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: '{text}'") from None
    if trials < MIN_COMPLEMENT_TRIALS:
        raise argparse.ArgumentTypeError(
            f"must be at least {MIN_COMPLEMENT_TRIALS}, got {trials}"
        )
    return trials


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help="YAML experiment config.")
    common.add_argument("--seed", type=int, default=None, help="Master seed (default: 0).")
    common.add_argument("--out", type=Path, default=None, help="Output directory.")
    common.add_argument("--threads", type=int, default=None, help="Worker threads of sweeps.")
    common.add_argument("--verbose", action="store_true", help="Print progress lines.")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Build the argument parser with every subcommand.

    :return: The parser.
    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="mixrates",
        description="Gaussian mixture approximation schemes, priors, sieves and rate tables.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    kernel = commands.add_parser("kernel", help="Kernel tables.")
    kernel = kernel.add_subparsers(dest="action", required=True)
    build = kernel.add_parser("build", parents=[common], help="Tabulate chi and eta in space.")
    build.add_argument("--mollifier-width", type=float, default=0.5)
    build.add_argument("--half-range", type=float, default=None)
    build.add_argument("--nodes", type=int, default=None)

    approx = commands.add_parser("approx", help="Approximation sweeps.")
    approx = approx.add_subparsers(dest="action", required=True)
    for scheme in ("location", "hybrid"):
        sweep = approx.add_parser(scheme, parents=[common], help=f"Sweep the {scheme} scheme.")
        sweep.add_argument("--test-function", default=None)
        sweep.add_argument("--design", default=None)
        sweep.add_argument("--betas", type=float, nargs="+", default=None)
        sweep.add_argument("--ps", type=float, nargs="+", default=None)
        sweep.add_argument(
            "--resolutions", type=float, nargs="+", default=None, help="Scales or levels."
        )

    prior = commands.add_parser("prior", help="Prior draws.")
    prior = prior.add_subparsers(dest="action", required=True)
    sample = prior.add_parser("sample", parents=[common], help="Draw random mixtures.")
    sample.add_argument("--kind", choices=[k.label for k in _PRIOR_KINDS], default="location")
    sample.add_argument("--draws", type=int, default=1)
    sample.add_argument("--alpha-bar", type=float, default=1.0)
    sample.add_argument("--jump-floor", type=float, default=1e-3)
    sample.add_argument("--scale-a", type=float, default=1.0)
    sample.add_argument("--scale-b", type=float, default=1.0)
    sample.add_argument("--alpha-sigma", type=float, default=1.0)
    sample.add_argument("--b6", type=float, default=2.0)

    rates = commands.add_parser("rates", help="Rate tables.")
    rates = rates.add_subparsers(dest="action", required=True)
    table = rates.add_parser("table", parents=[common], help="Render the rate exponents.")
    table.add_argument("--betas", nargs="+", default=["0.5", "1", "2"])
    table.add_argument("--ps", nargs="+", default=["1", "2", "4", "inf"])
    table.add_argument("--format", choices=["markdown", "csv"], default="markdown")
    table.add_argument("--exact", action="store_true", help="Exact fractions for rational inputs.")
    table.add_argument("--symbolic", action="store_true", help="One formula per regime column.")

    sieve = commands.add_parser("sieve", help="Sieve checks.")
    sieve = sieve.add_subparsers(dest="action", required=True)
    check = sieve.add_parser("check", parents=[common], help="Net covering and complement mass.")
    check.add_argument("--kind", choices=[k.label for k in _SIEVE_KINDS], default="location")
    check.add_argument("--n", type=int, default=50)
    check.add_argument("--H", type=float, default=1.0)
    check.add_argument("--epsilon", type=float, default=0.2)
    check.add_argument("--members", type=int, default=1000)
    check.add_argument(
        "--complement-trials", type=_trial_count, default=MIN_COMPLEMENT_TRIALS
    )
    check.add_argument("--alpha-bar", type=float, default=1.0)

    validate = commands.add_parser("validate", parents=[common], help="Run invariant validators.")
    validate.add_argument("--which", nargs="+", choices=VALIDATOR_GROUPS, default=None)
    return parser


def _seed(args: argparse.Namespace) -> int:
    return 0 if args.seed is None else args.seed


def _out(args: argparse.Namespace, default: str = "results") -> Path:
    return Path(default) if args.out is None else args.out


def _announce(args: argparse.Namespace, paths: Sequence[Path]) -> None:
    if args.verbose:
        for path in paths:
            print(f"{LOG_SWEEP} harness.main() | write artifact -> {path}")


def _rate_number(text: str, exact: bool) -> float | Fraction:
    if text.strip().lower() in ("inf", "+inf", "infinity"):
        return math.inf
    return Fraction(text) if exact else float(text)


def _kernel_build(args: argparse.Namespace) -> int:
    settings = {
        "mollifier_width": args.mollifier_width,
        "half_range": args.half_range,
        "nodes": args.nodes,
    }
    cutoff = build_cutoff(args.mollifier_width)
    grid = None
    if args.half_range is not None or args.nodes is not None:
        grid = default_x_grid(
            DEFAULT_KERNEL_HALF_RANGE if args.half_range is None else args.half_range,
            DEFAULT_KERNEL_NODES if args.nodes is None else args.nodes,
        )
    table = invert_to_space(cutoff, grid)
    digest = config_hash(settings, _seed(args))
    out = _out(args)
    rows = zip(table.x_grid, table.chi_values, table.eta_values, strict=True)
    paths = [
        write_csv(
            out / "kernel.csv", ("config_hash", "x", "chi", "eta"), ((digest, *r) for r in rows)
        ),
        write_json(
            out / "kernel.json",
            {
                "config": settings,
                "config_hash": digest,
                "mollifier_width": cutoff.mollifier_width,
                "spectral_plateau": list(cutoff.plateau),
                "spectral_support": list(cutoff.support),
                "half_range": table.half_range,
                "spacing": table.spacing,
                "nodes": int(table.x_grid.size),
                "achieved_error": table.achieved_error,
            },
        ),
    ]
    _announce(args, paths)
    return 0


def _approx(args: argparse.Namespace) -> int:
    data = load_mapping(args.config) if args.config is not None else {}
    data["scheme"] = args.action
    overrides = {
        "seed": args.seed,
        "threads": args.threads,
        "output_dir": None if args.out is None else str(args.out),
        "test_function": args.test_function,
        "design": args.design,
        "beta_grid": args.betas,
        "p_grid": args.ps,
        "resolution_grid": args.resolutions,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    config = ExperimentConfig.from_mapping(data)
    result = run_sweep(config, verbose=args.verbose)
    _announce(args, write_sweep(result, config.output_dir, stem=f"sweep_{config.scheme.label}"))
    return 0


def _prior_sample(args: argparse.Namespace) -> int:
    kind = MixtureKind.from_label(args.kind)
    if kind is MixtureKind.HYBRID:
        scale = ScalePriorSpec.dirichlet_process(args.alpha_sigma, args.scale_a, args.scale_b)
    else:
        scale = ScalePriorSpec.inverse_gaussian(args.scale_a, args.scale_b)
    loc_base = LocationBaseSpec.pareto(args.b6)
    settings = {
        "kind": kind.label,
        "draws": args.draws,
        "alpha_bar": args.alpha_bar,
        "jump_floor": args.jump_floor,
        "scale_a": args.scale_a,
        "scale_b": args.scale_b,
        "alpha_sigma": args.alpha_sigma if kind is MixtureKind.HYBRID else None,
        "b6": args.b6,
    }
    seed = _seed(args)
    digest = config_hash(settings, seed)
    streams = np.random.SeedSequence(seed).spawn(args.draws)

    rows = []
    summaries = []
    for index, stream in enumerate(streams):
        draw = sample_prior(
            kind,
            scale,
            loc_base,
            args.alpha_bar,
            args.jump_floor,
            np.random.default_rng(stream),
            verbose=args.verbose,
        )
        table = draw.measure.rows()
        if draw.sigma is not None:
            table[:, 1] = draw.sigma
        rows.extend((digest, index, *atom) for atom in table)
        summaries.append(
            {
                "draw": index,
                "atoms": len(draw),
                "total_variation": draw.measure.total_variation,
                "sigma": draw.sigma,
                "bias_bound": draw.measure.bias_bound,
            }
        )
    out = _out(args)
    paths = [
        write_csv(out / "prior_atoms.csv", ("config_hash", "draw", "mass", "sigma", "mu"), rows),
        write_json(out / "prior.json", {"config": settings, "config_hash": digest, "draws": summaries}),
    ]
    _announce(args, paths)
    return 0


def _rates_table(args: argparse.Namespace) -> int:
    suffix = "csv" if args.format == "csv" else "md"
    out = _out(args)
    if args.symbolic:
        text = symbolic_table(args.format, MAIN_KINDS)
        path = out / f"rates_symbolic.{suffix}"
    else:
        betas = [_rate_number(b, args.exact) for b in args.betas]
        ps = [_rate_number(p, args.exact) for p in args.ps]
        text = render_table(betas, ps, fmt=args.format, exact=args.exact)
        path = out / f"rates_table.{suffix}"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    _announce(args, [path])
    return 0


def _sieve_check(args: argparse.Namespace) -> int:
    kind = MixtureKind.from_label(args.kind)
    spec = SieveSpec(args.n, args.H, args.epsilon, kind=kind)
    settings = {
        "kind": kind.label,
        "n": args.n,
        "H": args.H,
        "epsilon": args.epsilon,
        "members": args.members,
        "complement_trials": args.complement_trials,
        "alpha_bar": args.alpha_bar,
    }
    seed = _seed(args)
    covariate_stream, covering_stream, complement_stream = np.random.SeedSequence(seed).spawn(3)
    covariates = np.random.default_rng(covariate_stream).standard_normal(args.n)
    covering = net_covering_check(
        spec, covariates, args.members, np.random.default_rng(covering_stream), verbose=args.verbose
    )
    complement = mc_sieve_complement(
        kind,
        spec,
        ScalePriorSpec.inverse_gaussian(),
        args.alpha_bar,
        args.complement_trials,
        np.random.default_rng(complement_stream),
        verbose=args.verbose,
    )
    passed = covering.passed and complement.passed
    path = write_json(
        _out(args) / "sieve.json",
        {
            "config": settings,
            "config_hash": config_hash(settings, seed),
            "net": net_log_cardinality(spec, covariates).to_dict(),
            "covering": covering.to_dict(),
            "complement": complement.to_dict(),
            "passed": passed,
        },
    )
    _announce(args, [path])
    return 0 if passed else 1


def _validate(args: argparse.Namespace) -> int:
    seed = _seed(args)
    report = run_validators(args.which, seed=seed, verbose=args.verbose)
    payload = report.to_dict()
    payload["config_hash"] = config_hash({"which": list(report.groups)}, seed)
    path = write_json(_out(args) / "validation.json", payload)
    _announce(args, [path])
    for failure in report.failures:
        print(f"failed invariant: {failure.group}.{failure.name} ({failure.detail})", file=sys.stderr)
    return report.exit_code


_HANDLERS = {
    ("kernel", "build"): _kernel_build,
    ("approx", "location"): _approx,
    ("approx", "hybrid"): _approx,
    ("prior", "sample"): _prior_sample,
    ("rates", "table"): _rates_table,
    ("sieve", "check"): _sieve_check,
    ("validate", None): _validate,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run one subcommand.

    :param argv: Arguments without the program name; ``sys.argv[1:]`` when omitted.

    :return: Exit code: 0 on success, 1 on a failed check, 2 on invalid input or a
        numerical failure.
    """
    args = build_parser().parse_args(argv)
    handler = _HANDLERS[(args.command, getattr(args, "action", None))]
    try:
        return handler(args)
    except (ValueError, QuadratureError, WindowError) as error:
        print(f"mixrates: error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
