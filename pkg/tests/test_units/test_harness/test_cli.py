"""
Test suite for the ``mixrates`` command line.

Validates that:
1. Each subcommand writes its artifacts and returns 0.
2. Seeded commands are reproducible.
3. Invalid input exits with 2 and a one-line error.
4. Verbose runs announce every artifact in the progress format.
"""

__docformat__ = "restructuredtext"

import json

import pytest
from _helpers import log_lines, parse_log_line

from mixrates.harness.cli import main


class TestRates:
    """``rates table``."""

    def test_markdown(self, tmp_path):
        """Exact exponents render as fractions."""
        code = main(["rates", "table", "--exact", "--betas", "1", "--ps", "4", "--out", str(tmp_path)])
        assert code == 0
        text = (tmp_path / "rates_table.md").read_text(encoding="utf-8")
        assert "4/7" in text
        assert text.startswith("| kind | β | p=4 |")

    def test_symbolic_csv(self, tmp_path):
        """The symbolic table goes to its own file."""
        assert main(["rates", "table", "--symbolic", "--format", "csv", "--out", str(tmp_path)]) == 0
        assert (tmp_path / "rates_symbolic.csv").read_text(encoding="utf-8").strip()

    def test_bad_format(self):
        """Argument errors exit through argparse."""
        with pytest.raises(SystemExit) as info:
            main(["rates", "table", "--format", "html"])
        assert info.value.code == 2


class TestPrior:
    """``prior sample``."""

    @pytest.mark.parametrize("kind", ["location", "location_scale", "hybrid"])
    def test_artifacts(self, tmp_path, kind):
        """One summary per draw and one row per atom."""
        code = main(["prior", "sample", "--kind", kind, "--draws", "2", "--seed", "3", "--out", str(tmp_path)])
        assert code == 0
        summary = json.loads((tmp_path / "prior.json").read_text(encoding="utf-8"))
        assert [d["draw"] for d in summary["draws"]] == [0, 1]
        assert summary["config"]["kind"] == kind
        rows = (tmp_path / "prior_atoms.csv").read_text(encoding="utf-8").splitlines()
        assert rows[0] == "schema_version,config_hash,draw,mass,sigma,mu"
        assert len(rows) - 1 == sum(d["atoms"] for d in summary["draws"])

    def test_reproducible(self, tmp_path):
        """The same seed writes the same files."""
        for name in ("a", "b"):
            main(["prior", "sample", "--draws", "2", "--seed", "5", "--out", str(tmp_path / name)])
        for artifact in ("prior.json", "prior_atoms.csv"):
            first = (tmp_path / "a" / artifact).read_text(encoding="utf-8")
            assert first == (tmp_path / "b" / artifact).read_text(encoding="utf-8")


class TestKernel:
    """``kernel build``."""

    def test_table(self, tmp_path):
        """One row per node and a summary."""
        code = main(["kernel", "build", "--half-range", "64", "--nodes", "2049", "--out", str(tmp_path)])
        assert code == 0
        rows = (tmp_path / "kernel.csv").read_text(encoding="utf-8").splitlines()
        assert rows[0] == "schema_version,config_hash,x,chi,eta"
        assert len(rows) == 2050
        summary = json.loads((tmp_path / "kernel.json").read_text(encoding="utf-8"))
        assert summary["nodes"] == 2049
        assert summary["half_range"] == 64.0
        assert summary["spectral_support"][1] <= 2.0


class TestApprox:
    """``approx location``."""

    def test_sweep(self, tmp_path):
        """A config file plus flags drives a two-cell sweep."""
        config = tmp_path / "sweep.yaml"
        config.write_text("design_samples: 100\nseed: 2\n", encoding="utf-8")
        code = main(
            [
                "approx",
                "location",
                "--config",
                str(config),
                "--design",
                "gaussian",
                "--resolutions",
                "0.25",
                "0.125",
                "--out",
                str(tmp_path / "out"),
            ]
        )
        assert code == 0
        frontier = json.loads((tmp_path / "out" / "sweep_location_frontier.json").read_text(encoding="utf-8"))
        assert frontier["config"]["design"] == "gaussian"
        assert frontier["config"]["design_samples"] == 100
        assert (tmp_path / "out" / "sweep_location.csv").exists()
        assert (tmp_path / "out" / "sweep_location_timings.csv").exists()

    def test_invalid_scale(self, tmp_path, capsys):
        """A location scale above 1 exits with 2."""
        code = main(["approx", "location", "--resolutions", "2", "--out", str(tmp_path)])
        assert code == 2
        err = capsys.readouterr().err
        assert err.startswith("mixrates: error: Location scales must lie")


class TestSieve:
    """``sieve check``."""

    def test_report(self, tmp_path):
        """The exit code follows the recorded verdict."""
        code = main(
            [
                "sieve",
                "check",
                "--epsilon",
                "0.8",
                "--members",
                "20",
                "--complement-trials",
                "10000",
                "--out",
                str(tmp_path),
            ]
        )
        report = json.loads((tmp_path / "sieve.json").read_text(encoding="utf-8"))
        assert code == (0 if report["passed"] else 1)
        assert report["config"]["n"] == 50
        assert report["covering"]["passed"]
        assert {"net", "complement", "config_hash"} <= set(report)

    def test_too_few_trials(self, tmp_path, capsys):
        """Complement trial counts below ten thousand are rejected while parsing."""
        with pytest.raises(SystemExit) as excinfo:
            main(["sieve", "check", "--complement-trials", "2000", "--out", str(tmp_path)])
        assert excinfo.value.code == 2
        assert "--complement-trials: must be at least 10000, got 2000" in capsys.readouterr().err
        assert not (tmp_path / "sieve.json").exists()


class TestValidate:
    """``validate``."""

    def test_rates(self, tmp_path):
        """The rate group passes and records its report."""
        assert main(["validate", "--which", "rates", "--out", str(tmp_path)]) == 0
        report = json.loads((tmp_path / "validation.json").read_text(encoding="utf-8"))
        assert report["passed"] is True
        assert report["groups"] == ["rates"]

    def test_verbose_announces_artifact(self, tmp_path, capsys):
        """The artifact path closes the progress output."""
        main(["validate", "--which", "rates", "--verbose", "--out", str(tmp_path)])
        last = parse_log_line(log_lines(capsys.readouterr().out)[-1])
        assert (last["owner"], last["method"], last["action"]) == ("harness", "main", "write artifact")
        assert last["target"] == str(tmp_path / "validation.json")
