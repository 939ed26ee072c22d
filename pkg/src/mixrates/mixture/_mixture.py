"""Finite signed mixtures of Gaussian bumps."""

__docformat__ = "restructuredtext"
__all__ = ["FiniteGaussMixture", "GaussAtom", "eval_mixture", "mixture_on_grid"]

import math
from collections.abc import Iterable
from dataclasses import dataclass, field

import numpy as np
from scipy import signal

from mixrates._constants import UNDERFLOW_RADIUS
from mixrates.custom_types import FloatArray
from mixrates.kernels import SpectralGrid

_DENSE_LIMIT = 4_000_000
_POINT_CHUNK = 512
_MAX_LATTICE_GROUPS = 64


@dataclass(frozen=True, slots=True)
class GaussAtom:
    """
    One weighted bump ``weight * phi((x - location) / scale)``.

    :ivar weight: Signed weight ``u``.
    :ivar location: Centre ``mu``.
    :ivar scale: Positive scale ``sigma``.
    """

    weight: float
    location: float
    scale: float

    def __post_init__(self):
        """Validate the atom."""
        if not self.scale > 0.0:
            raise ValueError(f"Atom scale must be positive, got {self.scale}")
        if not math.isfinite(self.weight):
            raise ValueError(f"Atom weight must be finite, got {self.weight}")


@dataclass(frozen=True, slots=True, eq=False)
class FiniteGaussMixture:
    """
    Finite signed Gaussian mixture ``sum_i u_i phi((x - mu_i) / sigma_i)``.

    Atoms are stored column-wise; :attr:`atoms` rebuilds them in order.

    :ivar weights: Signed weights.
    :ivar locations: Centres.
    :ivar scales: Positive scales.
    """

    weights: FloatArray = field(repr=False)
    locations: FloatArray = field(repr=False)
    scales: FloatArray = field(repr=False)

    def __post_init__(self):
        """Coerce to float arrays and validate."""
        for name in ("weights", "locations", "scales"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float).ravel())
        n = self.weights.size
        if self.locations.size != n or self.scales.size != n:
            raise ValueError(
                f"Mixture columns differ in length: {n}, {self.locations.size}, {self.scales.size}"
            )
        if n and not np.all(self.scales > 0.0):
            raise ValueError("Mixture scales must be positive")
        if n and not np.all(np.isfinite(self.weights)):
            raise ValueError("Mixture weights must be finite")

    @classmethod
    def empty(cls) -> "FiniteGaussMixture":
        """
        Mixture with no atoms; it evaluates to zero.

        :return: The empty mixture.
        """
        return cls(np.empty(0), np.empty(0), np.empty(0))

    @classmethod
    def from_atoms(cls, atoms: Iterable[GaussAtom]) -> "FiniteGaussMixture":
        """
        Build a mixture from atoms, keeping their order.

        :param atoms: Atoms.

        :return: The mixture.
        """
        rows = [(a.weight, a.location, a.scale) for a in atoms]
        if not rows:
            return cls.empty()
        w, mu, s = zip(*rows, strict=True)
        return cls(np.array(w), np.array(mu), np.array(s))

    @property
    def atoms(self) -> tuple[GaussAtom, ...]:
        """
        Get the atoms in order.

        :return: Tuple of atoms.
        """
        return tuple(
            GaussAtom(float(w), float(m), float(s))
            for w, m, s in zip(self.weights, self.locations, self.scales, strict=True)
        )

    @property
    def total_variation(self) -> float:
        """
        Get ``sum |u_i|``, which bounds the mixture everywhere.

        :return: Total absolute weight.
        """
        return float(np.sum(np.abs(self.weights)))

    def __len__(self) -> int:
        """Return the number of atoms."""
        return int(self.weights.size)

    def __add__(self, other: "FiniteGaussMixture") -> "FiniteGaussMixture":
        """Concatenate atoms; the sum evaluates to the sum of the parts."""
        return FiniteGaussMixture(
            np.concatenate([self.weights, other.weights]),
            np.concatenate([self.locations, other.locations]),
            np.concatenate([self.scales, other.scales]),
        )

    def __call__(self, x: FloatArray | float) -> FloatArray:
        """Evaluate the mixture at ``x``."""
        return eval_mixture(self, x)


def _eval_block(
    weights: FloatArray, locations: FloatArray, scales: FloatArray, x: FloatArray
) -> FloatArray:
    t = (x[:, None] - locations[None, :]) / scales[None, :]
    bumps = np.where(np.abs(t) <= UNDERFLOW_RADIUS, np.exp(-0.5 * t * t), 0.0)
    return bumps @ weights


def eval_mixture(m: FiniteGaussMixture, x: FloatArray | float) -> FloatArray:
    """
    Evaluate ``sum_i u_i phi((x - mu_i) / sigma_i)``; there is no normalizing constant.

    Atoms farther than :data:`UNDERFLOW_RADIUS` scales from a point are skipped.

    :param m: Mixture.

    :param x: Evaluation points (scalar or array).

    :return: Values with the shape of ``x``.
    """
    x_arr = np.asarray(x, dtype=float)
    flat = x_arr.ravel()
    out = np.zeros(flat.size)
    if len(m) == 0 or flat.size == 0:
        return out.reshape(x_arr.shape)
    if len(m) * flat.size <= _DENSE_LIMIT:
        out = _eval_block(m.weights, m.locations, m.scales, flat)
        return out.reshape(x_arr.shape)

    atom_order = np.argsort(m.locations, kind="stable")
    w, mu, s = m.weights[atom_order], m.locations[atom_order], m.scales[atom_order]
    reach = UNDERFLOW_RADIUS * float(np.max(s))
    point_order = np.argsort(flat, kind="stable")
    sorted_x = flat[point_order]
    values = np.empty(flat.size)
    for start in range(0, sorted_x.size, _POINT_CHUNK):
        chunk = sorted_x[start : start + _POINT_CHUNK]
        lo = np.searchsorted(mu, chunk[0] - reach, side="left")
        hi = np.searchsorted(mu, chunk[-1] + reach, side="right")
        values[start : start + chunk.size] = (
            _eval_block(w[lo:hi], mu[lo:hi], s[lo:hi], chunk) if hi > lo else 0.0
        )
    out[point_order] = values
    return out.reshape(x_arr.shape)


def _lattice_indices(locations: FloatArray, grid: SpectralGrid) -> FloatArray | None:
    ratio = locations / grid.spacing
    nearest = np.round(ratio)
    if np.all(np.abs(ratio - nearest) <= 1e-6):
        return nearest
    return None


def mixture_on_grid(m: FiniteGaussMixture, grid: SpectralGrid) -> FloatArray:
    """
    Evaluate a mixture at every node of a periodic grid.

    Atoms of a common scale sitting on grid nodes are summed by a zero-padded FFT
    convolution of their comb with the sampled bump, so the result is the exact linear
    (not circular) sum. Remaining atoms are evaluated directly.

    :param m: Mixture.

    :param grid: Grid.

    :return: Values at ``grid.points``.
    """
    out = np.zeros(grid.size)
    if len(m) == 0:
        return out
    unique_scales = np.unique(m.scales)
    if unique_scales.size > _MAX_LATTICE_GROUPS:
        return eval_mixture(m, grid.points)

    leftover = np.zeros(len(m), dtype=bool)
    for scale in unique_scales:
        group = m.scales == scale
        nodes = _lattice_indices(m.locations[group], grid)
        if nodes is None:
            leftover |= group
            continue
        pad = math.ceil(UNDERFLOW_RADIUS * scale / grid.spacing)
        comb = np.zeros(grid.size + 2 * pad)
        index = nodes.astype(np.int64) + grid.center + pad
        keep = (index >= 0) & (index < comb.size)
        np.add.at(comb, index[keep], m.weights[group][keep])
        offsets = np.arange(-pad, pad + 1) * grid.spacing / scale
        bump = np.exp(-0.5 * offsets * offsets)
        out += signal.fftconvolve(comb, bump, mode="same")[pad : pad + grid.size]
    if np.any(leftover):
        rest = FiniteGaussMixture(
            m.weights[leftover], m.locations[leftover], m.scales[leftover]
        )
        out += eval_mixture(rest, grid.points)
    return out
