"""Draws from the location, location-scale and hybrid mixture priors."""

__docformat__ = "restructuredtext"
__all__ = ["PriorDraw", "sample_prior"]

from dataclasses import dataclass, field

import numpy as np

from mixrates._constants import LOG_SAMPLE
from mixrates._enums import LocationBaseKind, MixtureKind, ScalePriorKind, SmallJumpPolicy
from mixrates.custom_types import FloatArray
from mixrates.mixture import FiniteGaussMixture
from mixrates.priors._dirichlet import DiscreteScaleMeasure, sample_dp
from mixrates.priors._location_base import LocationBaseSpec
from mixrates.priors._scale import ScalePriorSpec
from mixrates.priors._sga import SignedAtomMeasure, sample_sga_process


@dataclass(frozen=True, slots=True, eq=False)
class PriorDraw:
    """
    One random function drawn from a mixture prior.

    :ivar kind: Prior family.
    :ivar measure: Signed atoms; location-scale sites for every family but location.
    :ivar sigma: Shared scale of the location families, ``None`` otherwise.
    :ivar scale_measure: Dirichlet-process scale realization of the hybrid family.
    """

    kind: MixtureKind
    measure: SignedAtomMeasure = field(repr=False)
    sigma: float | None = None
    scale_measure: DiscreteScaleMeasure | None = field(default=None, repr=False)

    @property
    def mixture(self) -> FiniteGaussMixture:
        """
        Get the drawn function as a finite mixture.

        :return: The mixture ``sum_i u_i phi((x - mu_i) / sigma_i)``.
        """
        return self.measure.to_mixture(self.sigma)

    def __call__(self, x: FloatArray | float) -> FloatArray:
        """Evaluate the drawn function."""
        return self.mixture(x)

    def __len__(self) -> int:
        """Return the number of atoms."""
        return len(self.measure)


def _paired_sites(scale_sampler, loc_base: LocationBaseSpec):
    def sample(rng: np.random.Generator, size: int) -> FloatArray:
        sigmas = np.asarray(scale_sampler(rng, size), dtype=float).reshape(size)
        return np.column_stack([sigmas, loc_base.sample(rng, size)])

    return sample


def sample_prior(
    kind: MixtureKind,
    scale: ScalePriorSpec,
    loc_base: LocationBaseSpec,
    alpha_bar: float,
    jump_floor: float,
    rng: np.random.Generator,
    policy: SmallJumpPolicy = SmallJumpPolicy.DISCARD,
    verbose: bool = False,
) -> PriorDraw:
    """
    Draw a random function from one of the mixture priors.

    - Location: one ``sigma ~ G_sigma`` shared by all atoms, sites ``mu ~ G_mu``.
    - Covariate location: as location, with ``G_mu`` built from the covariates.
    - Location-scale: sites ``(sigma, mu) ~ G_sigma x G_mu``.
    - Hybrid: first ``P_sigma ~ DP(alpha_sigma G_sigma)``, then sites
      ``(sigma, mu) ~ P_sigma x G_mu``.

    :param kind: Prior family.

    :param scale: Scale prior; the hybrid family needs the Dirichlet-process kind.

    :param loc_base: Location base measure ``G_mu``.

    :param alpha_bar: Total mass of the symmetric Gamma process.

    :param jump_floor: Smallest simulated jump magnitude.

    :param rng: Random stream.

    :param policy: Treatment of the jumps below the floor.

    :param verbose: Print one line per draw.

    :return: The draw.
    :raises ValueError: If the scale prior or location base does not fit the family.

    """
    sigma: float | None = None
    scale_measure: DiscreteScaleMeasure | None = None
    law = scale.base
    if kind in (MixtureKind.LOCATION, MixtureKind.COVARIATE_LOCATION):
        if kind is MixtureKind.COVARIATE_LOCATION and loc_base.kind is not LocationBaseKind.COVARIATE:
            raise ValueError("The covariate location prior needs a covariate base measure")
        sigma = float(law.sample(rng, 1)[0])
        measure = sample_sga_process(alpha_bar, loc_base.sample, jump_floor, rng, policy)
    elif kind is MixtureKind.LOCATION_SCALE:
        sites = _paired_sites(law.sample, loc_base)
        measure = sample_sga_process(alpha_bar, sites, jump_floor, rng, policy)
    else:
        if scale.kind is not ScalePriorKind.DIRICHLET_PROCESS or scale.alpha_sigma is None:
            raise ValueError("The hybrid prior needs a Dirichlet-process scale prior")
        scale_measure = sample_dp(scale.alpha_sigma, law, rng)
        sites = _paired_sites(scale_measure.sample, loc_base)
        measure = sample_sga_process(alpha_bar, sites, jump_floor, rng, policy)
    if verbose:
        print(
            f"{LOG_SAMPLE} priors.sample_prior() | draw -> {kind.label} "
            f"[atoms={len(measure)}, |M|={measure.total_variation:.4g}]"
        )
    return PriorDraw(kind, measure, sigma, scale_measure)
