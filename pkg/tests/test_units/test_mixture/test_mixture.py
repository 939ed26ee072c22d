"""
Test suite for finite signed Gaussian mixtures.

Validates that:
1. A mixture evaluates to ``sum_i u_i phi((x - mu_i) / sigma_i)`` without normalization.
2. The chunked evaluation of large mixtures agrees with the dense one.
3. Grid evaluation by FFT convolution agrees with direct evaluation, including
   off-lattice atoms.
4. Invalid columns are rejected.
"""

__docformat__ = "restructuredtext"

import numpy as np
import pytest

from mixrates.kernels import SpectralGrid, phi
from mixrates.mixture import FiniteGaussMixture, GaussAtom, eval_mixture, mixture_on_grid


class TestEvaluation:
    """Pointwise values."""

    def test_single_atom_peak(self):
        """A lone atom takes its weight at its centre."""
        m = FiniteGaussMixture.from_atoms([GaussAtom(-2.5, 1.0, 0.3)])
        assert m(1.0) == pytest.approx(-2.5)
        assert m(1.3) == pytest.approx(-2.5 * np.exp(-0.5))

    def test_matches_definition(self):
        """Values match the explicit sum."""
        rng = np.random.default_rng(1)
        w, mu, s = rng.normal(size=20), rng.uniform(-3, 3, 20), rng.uniform(0.1, 2.0, 20)
        m = FiniteGaussMixture(w, mu, s)
        xs = np.linspace(-5, 5, 101)
        expected = sum(wi * phi((xs - mi) / si) for wi, mi, si in zip(w, mu, s, strict=True))
        assert np.allclose(m(xs), expected, atol=1e-12)

    def test_empty_is_zero(self):
        """The empty mixture vanishes and keeps the input shape."""
        values = FiniteGaussMixture.empty()(np.zeros((3, 4)))
        assert values.shape == (3, 4)
        assert np.all(values == 0.0)

    def test_bounded_by_total_variation(self):
        """``|f(x)| <= sum |u_i|``."""
        rng = np.random.default_rng(2)
        m = FiniteGaussMixture(rng.normal(size=50), rng.uniform(-2, 2, 50), np.full(50, 0.2))
        assert np.max(np.abs(m(np.linspace(-4, 4, 2001)))) <= m.total_variation

    def test_sum_of_mixtures(self):
        """Concatenated atoms evaluate to the sum."""
        a = FiniteGaussMixture([1.0], [0.0], [1.0])
        b = FiniteGaussMixture([2.0, -1.0], [1.0, 2.0], [0.5, 0.5])
        xs = np.linspace(-3, 3, 31)
        assert len(a + b) == 3
        assert np.allclose((a + b)(xs), a(xs) + b(xs))

    def test_atoms_keep_order(self):
        """Atoms come back in storage order."""
        m = FiniteGaussMixture([3.0, 1.0], [0.5, -0.5], [1.0, 2.0])
        assert m.atoms == (GaussAtom(3.0, 0.5, 1.0), GaussAtom(1.0, -0.5, 2.0))

    @pytest.mark.slow
    def test_chunked_path_matches_dense(self):
        """Large mixtures take the sorted chunked path with the same result."""
        rng = np.random.default_rng(3)
        n = 6000
        m = FiniteGaussMixture(rng.normal(size=n), rng.uniform(-50, 50, n), rng.uniform(0.01, 0.5, n))
        xs = rng.uniform(-55, 55, 1000)
        chunked = eval_mixture(m, xs)
        dense = np.concatenate([eval_mixture(m, xs[i : i + 100]) for i in range(0, xs.size, 100)])
        assert np.allclose(chunked, dense, atol=1e-10)


class TestGridEvaluation:
    """Evaluation on periodic grids."""

    def test_lattice_atoms(self):
        """Atoms on grid nodes are summed exactly by convolution."""
        grid = SpectralGrid.for_lattice(0.05, 4.0, oversample=4)
        k = np.arange(-60, 61)
        rng = np.random.default_rng(4)
        m = FiniteGaussMixture(rng.normal(size=k.size), 0.05 * k, np.full(k.size, 0.1))
        assert np.allclose(mixture_on_grid(m, grid), eval_mixture(m, grid.points), atol=1e-10)

    def test_off_lattice_atoms(self):
        """Atoms between nodes fall back to direct evaluation."""
        grid = SpectralGrid.covering(5.0, 0.01)
        m = FiniteGaussMixture([1.0, -0.5, 2.0], [0.0, 0.123456, -1.0], [0.2, 0.2, 0.7])
        assert np.allclose(mixture_on_grid(m, grid), eval_mixture(m, grid.points), atol=1e-10)

    def test_empty(self):
        """The empty mixture is zero on the grid."""
        grid = SpectralGrid(spacing=0.1, size=16)
        assert np.all(mixture_on_grid(FiniteGaussMixture.empty(), grid) == 0.0)


class TestValidation:
    """Invalid mixtures."""

    def test_column_lengths(self):
        """All columns must have equal length."""
        with pytest.raises(ValueError, match=r"columns differ in length"):
            FiniteGaussMixture([1.0, 2.0], [0.0], [1.0, 1.0])

    def test_positive_scales(self):
        """Scales must be positive."""
        with pytest.raises(ValueError, match=r"scales must be positive"):
            FiniteGaussMixture([1.0], [0.0], [0.0])
        with pytest.raises(ValueError, match=r"scale must be positive"):
            GaussAtom(1.0, 0.0, -1.0)

    def test_finite_weights(self):
        """Weights must be finite."""
        with pytest.raises(ValueError, match=r"weights must be finite"):
            FiniteGaussMixture([np.inf], [0.0], [1.0])
