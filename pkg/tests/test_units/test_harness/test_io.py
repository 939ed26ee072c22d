"""
Test suite for the artifact writers.

Validates that:
1. Values convert to plain JSON types, with non-finite floats as strings.
2. Canonical JSON and the config hash are deterministic and order independent.
3. CSV files lead with the schema version and keep floats exact.
4. JSON files carry the schema version with sorted keys.
"""

__docformat__ = "restructuredtext"

import json
import math
from fractions import Fraction

import numpy as np

from mixrates._constants import SCHEMA_VERSION
from mixrates.harness import canonical_json, config_hash, jsonable, write_csv, write_json


class TestJsonable:
    """Conversion to plain types."""

    def test_non_finite(self):
        """Infinities and NaN become strings."""
        assert jsonable([math.inf, -math.inf, math.nan, 1.5]) == ["inf", "-inf", "nan", 1.5]

    def test_numpy(self):
        """Numpy scalars and arrays become Python values."""
        out = jsonable({"a": np.float64(0.25), "b": np.int64(3), "c": np.array([1.0, np.inf]), "d": np.bool_(True)})
        assert out == {"a": 0.25, "b": 3, "c": [1.0, "inf"], "d": True}
        assert type(out["b"]) is int
        assert type(out["d"]) is bool

    def test_fraction(self):
        """Fractions keep their exact text."""
        assert jsonable({"q": Fraction(4, 7)}) == {"q": "4/7"}


class TestCanonical:
    """Canonical serialization and hashing."""

    def test_key_order(self):
        """Key order does not change the text."""
        assert canonical_json({"b": 1, "a": [2, 3]}) == canonical_json({"a": [2, 3], "b": 1})
        assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'

    def test_hash(self):
        """Sixteen hex digits that track both the config and the seed."""
        digest = config_hash({"n": 50}, 0)
        assert len(digest) == 16
        assert digest == config_hash({"n": 50}, 0)
        assert digest != config_hash({"n": 50}, 1)
        assert digest != config_hash({"n": 51}, 0)


class TestWriters:
    """CSV and JSON files."""

    def test_csv(self, tmp_path):
        """The schema version leads every row and floats survive exactly."""
        value = 0.1 + 0.2
        path = write_csv(tmp_path / "nested" / "rows.csv", ("name", "x"), [("a", value), ("b", math.inf)])
        lines = path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "schema_version,name,x"
        assert lines[1] == f"{SCHEMA_VERSION},a,{value!r}"
        assert float(lines[1].split(",")[-1]) == value
        assert lines[2] == f"{SCHEMA_VERSION},b,inf"

    def test_json(self, tmp_path):
        """Objects carry the schema version and sorted keys."""
        path = write_json(tmp_path / "out.json", {"z": math.nan, "a": 1})
        text = path.read_text(encoding="utf-8")
        data = json.loads(text)
        assert data == {"a": 1, "schema_version": SCHEMA_VERSION, "z": "nan"}
        assert text.index('"a"') < text.index('"schema_version"') < text.index('"z"')
        assert text.endswith("\n")
