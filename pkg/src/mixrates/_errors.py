"""Domain exceptions for mixrates."""

__docformat__ = "restructuredtext"
__all__ = ["QuadratureError", "WindowError"]


class QuadratureError(RuntimeError):
    """
    Numerical integration failed to reach the requested tolerance.

    :ivar achieved: Error estimate that was actually reached.
    :ivar tol: Requested tolerance.
    :ivar level: Dyadic level of the hybrid cascade, if any.
    """

    def __init__(self, achieved: float, tol: float, level: int | None = None):
        """
        Initialize the error.

        :param achieved: Error estimate that was actually reached.

        :param tol: Requested tolerance.

        :param level: Dyadic level of the hybrid cascade, if any.

        """
        where = "" if level is None else f" at level {level}"
        super().__init__(
            f"Quadrature did not reach tolerance{where}: achieved {achieved:.3e}, requested {tol:.3e}"
        )
        self.achieved = achieved
        self.tol = tol
        self.level = level


class WindowError(ValueError):
    """
    A coefficient window is too small: a boundary coefficient exceeds its threshold.

    :ivar boundary: Offending lattice index ``k`` or ``(j, k)`` for the hybrid cascade.
    :ivar value: Magnitude of the boundary coefficient.
    :ivar threshold: Largest admissible boundary magnitude.
    """

    def __init__(self, boundary: int | tuple[int, int], value: float, threshold: float):
        """
        Initialize the error.

        :param boundary: Offending lattice index ``k`` or ``(j, k)``.

        :param value: Magnitude of the boundary coefficient.

        :param threshold: Largest admissible boundary magnitude.

        """
        super().__init__(
            f"Coefficient window too small: boundary index {boundary} has |u| = {value:.3e} "
            f"> {threshold:.3e}"
        )
        self.boundary = boundary
        self.value = value
        self.threshold = threshold
