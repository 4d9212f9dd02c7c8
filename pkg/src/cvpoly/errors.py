"""Exception types raised by the toolkit.

Every error is a subclass of :class:`CvpolyError`, so callers can catch the
whole family with one handler while tests pin down the specific condition.
"""


class CvpolyError(Exception):
    """Base class for all toolkit errors."""


class GridTooNarrow(CvpolyError):
    """State support reaches the grid edge beyond the allowed ratio."""


class AsymmetricGrid(CvpolyError):
    """Operation requires a grid symmetric about q = 0."""


class GridMismatch(CvpolyError):
    """Two states passed to a binary operation live on different grids."""


class IllConditioned(CvpolyError):
    """Polynomial root finding failed the reconstruction check."""


class SingularAncilla(CvpolyError):
    """Ancilla width hits the singular value of the subtraction protocol."""


class ZeroNorm(CvpolyError):
    """A transformed state has numerically vanishing norm."""


class ZeroAncilla(CvpolyError):
    """Photon subtraction annihilates the ancilla (it is the vacuum)."""


class UnsupportedInput(CvpolyError):
    """Analytic route asked for an input family it does not cover."""


class EmptyScanRange(CvpolyError):
    """Optimization scan received no candidate values."""


class EmptyEnsemble(CvpolyError):
    """Mixed-state fidelity asked for an ensemble with no members."""
