"""Enumerations for mixrates."""

__docformat__ = "restructuredtext"
__all__ = ["LocationBaseKind", "MixtureKind", "ScalePriorKind", "SmallJumpPolicy"]

from enum import IntEnum, unique


@unique
class MixtureKind(IntEnum):
    """Family of Gaussian mixture priors."""

    LOCATION = 1
    """Single shared scale, random signed measure over locations."""
    LOCATION_SCALE = 2
    """Random signed measure over (scale, location) pairs."""
    HYBRID = 3
    """Location-scale mixture whose scale base measure is a Dirichlet process draw."""
    COVARIATE_LOCATION = 4
    """Location mixture whose location base measure is built from the covariates."""

    def __repr__(self):
        """Return string representation."""
        return f"{self.name}"

    @property
    def label(self) -> str:
        """
        Get the lowercase label used in configuration files and CSV rows.

        :return: Label such as ``"location_scale"``.
        """
        return self.name.lower()

    @classmethod
    def from_label(cls, label: str) -> "MixtureKind":
        """
        Parse a lowercase label.

        :param label: Label such as ``"hybrid"``.

        :return: Matching member.
        :raises ValueError: If the label names no member.

        """
        try:
            return cls[label.strip().upper()]
        except KeyError:
            choices = [member.label for member in cls]
            raise ValueError(f"Unknown mixture kind: {label!r}. Choose one of {choices}.") from None


@unique
class ScalePriorKind(IntEnum):
    """Prior placed on the scale of the Gaussian components."""

    INVERSE_GAUSSIAN = 1
    """Fixed inverse-Gaussian scale distribution."""
    DIRICHLET_PROCESS = 2
    """Dirichlet process with inverse-Gaussian base measure."""

    def __repr__(self):
        """Return string representation."""
        return f"{self.name}"


@unique
class SmallJumpPolicy(IntEnum):
    """Treatment of symmetric Gamma process jumps below the simulation floor."""

    DISCARD = 1
    """Drop them; the bias in total variation is at most twice the floor per unit mass."""
    LUMP = 2
    """Replace them by one compensating atom with moment-matched Gamma parts."""

    def __repr__(self):
        """Return string representation."""
        return f"{self.name}"


@unique
class LocationBaseKind(IntEnum):
    """Base measure of the mixture locations."""

    FIXED = 1
    """Fixed symmetric Pareto-tailed distribution."""
    COVARIATE = 2
    """Kernel smoothing of the empirical covariate distribution."""

    def __repr__(self):
        """Return string representation."""
        return f"{self.name}"
