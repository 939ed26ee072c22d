"""CSV and JSON artifacts with a schema version and a canonical config hash."""

__docformat__ = "restructuredtext"
__all__ = ["canonical_json", "config_hash", "jsonable", "write_csv", "write_json"]

import csv
import hashlib
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from pathlib import Path

import numpy as np

from mixrates._constants import SCHEMA_VERSION


def jsonable(value):
    """
    Convert a value to plain JSON types.

    Non-finite floats become the strings ``"inf"``, ``"-inf"`` and ``"nan"``; numpy
    scalars and arrays become Python numbers and lists; fractions become strings.

    :param value: Any nesting of mappings, sequences and scalars.

    :return: The converted value.
    """
    if isinstance(value, Mapping):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, list | tuple):
        return [jsonable(v) for v in value]
    if isinstance(value, bool | np.bool_):
        return bool(value)
    if isinstance(value, int | np.integer):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float | np.floating):
        value = float(value)
        if math.isfinite(value):
            return value
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value


def canonical_json(value) -> str:
    """Serialize with sorted keys and no whitespace."""
    return json.dumps(jsonable(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def config_hash(config: Mapping, seed: int) -> str:
    """
    Get the first 16 hex digits of the SHA-256 of the canonical config plus the seed.

    :param config: Plain mapping of the configuration.

    :param seed: Master seed.

    :return: The hash.
    """
    payload = canonical_json({"config": config, "seed": int(seed)})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _cell(value) -> str:
    if isinstance(value, float | np.floating):
        value = float(value)
        return repr(value) if math.isfinite(value) else str(value)
    return str(value)


def write_csv(path: Path | str, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    """
    Write rows under a ``schema_version`` column.

    Floats are written with ``repr`` so they round-trip exactly.

    :param path: Output file; parent directories are created.

    :param header: Column names.

    :param rows: Row values in header order.

    :return: The path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["schema_version", *header])
        for row in rows:
            writer.writerow([SCHEMA_VERSION, *(_cell(v) for v in row)])
    return path


def write_json(path: Path | str, payload: Mapping) -> Path:
    """
    Write a JSON object carrying ``schema_version``, with sorted keys.

    :param path: Output file; parent directories are created.

    :param payload: Object to write.

    :return: The path written.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = jsonable({"schema_version": SCHEMA_VERSION, **payload})
    path.write_text(json.dumps(body, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    return path
