"""Experiment configuration loaded from YAML."""

__docformat__ = "restructuredtext"
__all__ = ["ExperimentConfig", "default_resolution_grid", "load_mapping"]

import dataclasses
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from mixrates._constants import DEFAULT_H_MAX, DEFAULT_RADIUS_CAP
from mixrates._enums import MixtureKind
from mixrates.harness._io import config_hash

_SCHEMES = (MixtureKind.LOCATION, MixtureKind.HYBRID)


def default_resolution_grid(scheme: MixtureKind) -> tuple[float, ...]:
    """
    Get the default sweep resolutions.

    :param scheme: Location or hybrid.

    :return: ``sigma = 2^-3, ..., 2^-9`` for location, ``J = 3, ..., 8`` for hybrid.
    """
    if MixtureKind(scheme) is MixtureKind.HYBRID:
        return tuple(float(J) for J in range(3, 9))
    return tuple(2.0**-k for k in range(3, 10))


def load_mapping(path: Path | str) -> dict:
    """
    Read a YAML file holding one mapping.

    :param path: Config file.

    :return: The mapping; an empty file gives an empty mapping.
    :raises ValueError: If the file holds something other than a mapping.

    """
    with Path(path).open(encoding="utf-8") as handle:
        data = yaml.safe_load(handle)
    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ValueError(f"Configuration file {path} must hold a mapping, got {type(data).__name__}")
    return dict(data)


def _number(value) -> float:
    if isinstance(value, str) and value.strip().lower() in ("inf", "+inf", "infinity"):
        return math.inf
    return float(value)


def _grid(name: str, values) -> tuple[float, ...]:
    if isinstance(values, int | float | str):
        values = [values]
    grid = tuple(_number(v) for v in values)
    if not grid:
        raise ValueError(f"{name} must be nonempty")
    return grid


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
    """
    One sweep over ``(beta, p, resolution)`` cells.

    The regression noise ``noise_s`` is carried for completeness; no data is generated.

    :ivar scheme: Location or hybrid.
    :ivar test_function: Catalog key of ``f0``; ``"weierstrass"`` builds the envelope
        of each ``beta`` in the grid.
    :ivar design: Catalog key of ``Q0``.
    :ivar beta_grid: Hölder orders used by the plans.
    :ivar p_grid: Moment indices used by the plans; ``inf`` allowed.
    :ivar resolution_grid: Scales ``sigma`` (location) or finest levels ``J`` (hybrid).
    :ivar seed: Master seed.
    :ivar output_dir: Directory of the CSV and JSON artifacts.
    :ivar noise_s: Regression noise level.
    :ivar h_max: Bandwidth cap.
    :ivar radius_cap: Largest grid half width.
    :ivar design_samples: Monte Carlo draws of the design-weighted error.
    :ivar threads: Worker threads.
    """

    scheme: MixtureKind = MixtureKind.LOCATION
    test_function: str = "tent"
    design: str = "pareto_2"
    beta_grid: tuple[float, ...] = (1.0,)
    p_grid: tuple[float, ...] = (2.0,)
    resolution_grid: tuple[float, ...] = field(default=())
    seed: int = 0
    output_dir: str = "results"
    noise_s: float = 1.0
    h_max: float = DEFAULT_H_MAX
    radius_cap: float = DEFAULT_RADIUS_CAP
    design_samples: int = 2000
    threads: int = 1

    def __post_init__(self):
        """Normalize the grids and validate ranges."""
        scheme = self.scheme
        if isinstance(scheme, str):
            scheme = MixtureKind.from_label(scheme)
        scheme = MixtureKind(scheme)
        if scheme not in _SCHEMES:
            raise ValueError(f"scheme must be location or hybrid, got {scheme.label}")
        object.__setattr__(self, "scheme", scheme)
        object.__setattr__(self, "beta_grid", _grid("beta_grid", self.beta_grid))
        object.__setattr__(self, "p_grid", _grid("p_grid", self.p_grid))
        resolution = self.resolution_grid or default_resolution_grid(scheme)
        object.__setattr__(self, "resolution_grid", _grid("resolution_grid", resolution))

        if any(not 0.0 < b < math.inf for b in self.beta_grid):
            raise ValueError(f"beta_grid must hold positive finite values, got {self.beta_grid}")
        if any(not p > 0.0 for p in self.p_grid):
            raise ValueError(f"p_grid must hold positive values, got {self.p_grid}")
        if scheme is MixtureKind.LOCATION:
            if any(not 0.0 < s <= 1.0 for s in self.resolution_grid):
                raise ValueError(f"Location scales must lie in (0, 1], got {self.resolution_grid}")
        elif any(J < 1 or J != int(J) for J in self.resolution_grid):
            raise ValueError(f"Hybrid levels must be positive integers, got {self.resolution_grid}")
        if self.seed < 0:
            raise ValueError(f"seed must be nonnegative, got {self.seed}")
        if self.noise_s <= 0.0:
            raise ValueError(f"noise_s must be positive, got {self.noise_s}")
        if self.design_samples < 1:
            raise ValueError(f"design_samples must be at least 1, got {self.design_samples}")
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        """Get the admissible configuration keys."""
        return tuple(f.name for f in dataclasses.fields(cls))

    @classmethod
    def from_mapping(cls, data: Mapping | None) -> "ExperimentConfig":
        """
        Build a config from a plain mapping.

        :param data: Keys as in :meth:`field_names`; ``None`` gives the defaults.

        :return: The config.
        :raises ValueError: If a key is unknown.

        """
        data = dict(data or {})
        unknown = sorted(set(data) - set(cls.field_names()))
        if unknown:
            raise ValueError(f"Unknown configuration keys: {unknown}. Allowed keys: {sorted(cls.field_names())}")
        return cls(**data)

    @classmethod
    def from_yaml(cls, path: Path | str) -> "ExperimentConfig":
        """
        Load a config file.

        :param path: YAML file holding one mapping.

        :return: The config.
        :raises ValueError: If the file does not hold a mapping or has unknown keys.

        """
        return cls.from_mapping(load_mapping(path))

    def to_dict(self) -> dict:
        """
        Get the config as plain types.

        :return: Mapping with the scheme as its label and grids as lists.
        """
        out = {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}
        out["scheme"] = self.scheme.label
        for name in ("beta_grid", "p_grid", "resolution_grid"):
            out[name] = list(out[name])
        return out

    def to_yaml(self) -> str:
        """Render the config as YAML."""
        data = self.to_dict()
        for name in ("beta_grid", "p_grid", "resolution_grid"):
            data[name] = [v if math.isfinite(v) else "inf" for v in data[name]]
        return yaml.safe_dump(data, sort_keys=True)

    def result_dict(self) -> dict:
        """
        Get the keys that determine results, as plain types.

        :return: ``to_dict()`` without ``threads`` and ``output_dir``.
        """
        data = self.to_dict()
        for name in ("threads", "output_dir"):
            data.pop(name)
        return data

    @property
    def hash(self) -> str:
        """
        Get the config hash echoed in every artifact.

        :return: 16 hex digits over the result keys and the seed.
        """
        return config_hash(self.result_dict(), self.seed)
