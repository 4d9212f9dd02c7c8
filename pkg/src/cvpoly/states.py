"""Single-mode states in position representation on a uniform grid.

Conventions: q = (a + a')/sqrt(2), p = (a - a')/(i sqrt(2)), so [q, p] = i
and the vacuum has Var(q) = Var(p) = 1/2.  A Gaussian state of width w
displaced to (q0, p0) = (sqrt(2) Re alpha, sqrt(2) Im alpha) has the wave
function

    sigma(s) = (w sqrt(pi/2))**(-1/2) * exp(-(s - q0)**2 / w**2 + i p0 s),

so Var(q) = w**2 / 4 and w = sqrt(2) is the coherent/vacuum case.  All
states are sampled on uniform grids wide enough that their amplitude decays
below ``EDGE_RATIO`` of the peak before the boundary; transforms are then
spectrally accurate.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import AsymmetricGrid, GridMismatch, GridTooNarrow, ZeroNorm

# Maximum edge-to-peak amplitude ratio before a state is declared clipped.
EDGE_RATIO = 1e-8

# Squared norm below which normalization refuses to divide.
NORM_FLOOR = 1e-300


class SqueezeAxis(enum.Enum):
    """Quadrature whose noise a quoted dB figure reduces."""

    POSITION = "position"
    MOMENTUM = "momentum"


class Ladder(enum.Enum):
    ANNIHILATE = "annihilate"
    CREATE = "create"


class Direction(enum.Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


class DisplaceKind(enum.Enum):
    """X-type (position shift) or Z-type (momentum kick) displacement."""

    POSITION = "position"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class Grid:
    """Uniform position grid; ``n_points`` must be a power of two."""

    q_min: float
    q_max: float
    n_points: int

    def __post_init__(self) -> None:
        if not self.q_max > self.q_min:
            raise ValueError("grid needs q_max > q_min")
        n = self.n_points
        if n < 2 or n & (n - 1):
            raise ValueError("n_points must be a power of two >= 2")

    @functools.cached_property
    def q(self) -> np.ndarray:
        return np.linspace(self.q_min, self.q_max, self.n_points)

    @property
    def spacing(self) -> float:
        return (self.q_max - self.q_min) / (self.n_points - 1)

    @functools.cached_property
    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n_points, self.spacing)
        w[0] *= 0.5
        w[-1] *= 0.5
        return w

    def is_symmetric(self) -> bool:
        return abs(self.q_min + self.q_max) < 1e-12 * (self.q_max - self.q_min)

    def refined(self, factor: int = 2) -> "Grid":
        """Same window with ``factor`` times as many points."""
        return Grid(self.q_min, self.q_max, self.n_points * factor)


DEFAULT_GRID = Grid(-20.0, 20.0, 4096)


@dataclass(frozen=True)
class WaveFunction:
    """Complex amplitudes sampled on a :class:`Grid`.

    Not necessarily unit norm: operator applications return the raw product
    and callers normalize explicitly, keeping the discarded weight.
    """

    grid: Grid
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (self.grid.n_points,):
            raise ValueError("amplitude array does not match the grid")
        object.__setattr__(self, "amps", amps)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2 * self.grid.trapezoid_weights))

    def normalized(self) -> tuple["WaveFunction", float]:
        """Unit-norm copy plus the squared norm that was divided out."""
        n2 = self.norm_sq()
        if n2 < NORM_FLOOR:
            raise ZeroNorm(f"squared norm {n2:.3e} below {NORM_FLOOR:.0e}")
        return WaveFunction(self.grid, self.amps / math.sqrt(n2)), n2

    def density(self) -> np.ndarray:
        return np.abs(self.amps) ** 2


@dataclass(frozen=True)
class SqueezedParams:
    """Displacement and width of a Gaussian state.

    ``width`` is the Gaussian width w of the position wave function; the
    position variance is w**2/4 and the vacuum has w = sqrt(2).
    """

    alpha: complex
    width: float

    def __post_init__(self) -> None:
        if not self.width > 0:
            raise ValueError("width must be positive")

    @property
    def q_center(self) -> float:
        return math.sqrt(2.0) * self.alpha.real

    @property
    def p_center(self) -> float:
        return math.sqrt(2.0) * self.alpha.imag


@dataclass(frozen=True)
class TwoModeState:
    """Two-mode position amplitudes, indexed ``amps[i, j]`` = psi(q1_i, q2_j)."""

    grid1: Grid
    grid2: Grid
    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (self.grid1.n_points, self.grid2.n_points):
            raise ValueError("amplitude array does not match the grids")
        object.__setattr__(self, "amps", amps)

    def norm_sq(self) -> float:
        w1 = self.grid1.trapezoid_weights
        w2 = self.grid2.trapezoid_weights
        return float(np.einsum("i,j,ij->", w1, w2, np.abs(self.amps) ** 2))


def db_to_width(db: float, axis: SqueezeAxis) -> float:
    """Gaussian width for a squeezing level quoted in dB.

    ``axis`` names the quadrature whose variance the dB figure reduces:
    POSITION gives w = sqrt(2) * 10**(-db/20) < sqrt(2), MOMENTUM gives
    w = sqrt(2) * 10**(+db/20) > sqrt(2).  db = 0 is the vacuum either way.
    """
    sign = -1.0 if axis is SqueezeAxis.POSITION else 1.0
    return math.sqrt(2.0) * 10.0 ** (sign * db / 20.0)


def _check_support(amps: np.ndarray, grid: Grid, what: str) -> None:
    peak = float(np.max(np.abs(amps)))
    if peak == 0.0:
        return
    edge = max(abs(amps[0]), abs(amps[-1]))
    if edge > EDGE_RATIO * peak:
        raise GridTooNarrow(
            f"{what}: edge/peak amplitude {edge / peak:.2e} exceeds {EDGE_RATIO:.0e} "
            f"on [{grid.q_min}, {grid.q_max}]"
        )


def fock_state(n: int, grid: Grid = DEFAULT_GRID) -> WaveFunction:
    """Number state |n> for n <= 60.

    Hermite values come from the normalized three-term recurrence
    phi_{k+1} = s sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1}, which is
    stable and overflow free at every n in range.
    """
    if not 0 <= n <= 60:
        raise ValueError("fock_state supports 0 <= n <= 60")
    s = grid.q
    prev = np.zeros_like(s)
    cur = np.pi ** -0.25 * np.exp(-0.5 * s**2)
    for k in range(n):
        prev, cur = cur, s * math.sqrt(2.0 / (k + 1)) * cur - math.sqrt(k / (k + 1.0)) * prev
    _check_support(cur, grid, f"fock_state({n})")
    wf, _ = WaveFunction(grid, cur.astype(np.complex128)).normalized()
    return wf


def squeezed_state(params: SqueezedParams, grid: Grid = DEFAULT_GRID) -> WaveFunction:
    """Displaced squeezed vacuum with the module's Gaussian convention."""
    s = grid.q
    q0, p0 = params.q_center, params.p_center
    amp = np.exp(-((s - q0) ** 2) / params.width**2 + 1j * p0 * s)
    _check_support(amp, grid, f"squeezed_state(width={params.width:g})")
    wf, _ = WaveFunction(grid, amp).normalized()
    return wf


def coherent_state(alpha: complex, grid: Grid = DEFAULT_GRID) -> WaveFunction:
    """Coherent state |alpha>, the width sqrt(2) Gaussian."""
    return squeezed_state(SqueezedParams(alpha, math.sqrt(2.0)), grid)


def _spectral_derivative(wf: WaveFunction) -> np.ndarray:
    n = wf.grid.n_points
    freq = 2.0 * np.pi * np.fft.fftfreq(n, wf.grid.spacing)
    return np.fft.ifft(1j * freq * np.fft.fft(wf.amps))


def apply_ladder(wf: WaveFunction, which: Ladder) -> WaveFunction:
    """Apply a = (q + d/dq)/sqrt(2) or a' = (q - d/dq)/sqrt(2), unnormalized.

    The returned squared norm equals <N> (annihilate) or <N> + 1 (create).
    """
    deriv = _spectral_derivative(wf)
    sgn = 1.0 if which is Ladder.ANNIHILATE else -1.0
    return WaveFunction(wf.grid, (wf.grid.q * wf.amps + sgn * deriv) / math.sqrt(2.0))


# --- same-grid Fourier transform -------------------------------------------
#
# The forward transform has kernel exp(+i s t)/sqrt(2 pi) and is evaluated on
# the position grid itself.  The grid is generally not self-dual
# (spacing**2 != 2 pi / n), so a plain FFT does not land on the grid nodes;
# the quadrature sum is instead evaluated exactly with a Bluestein chirp
# factorization, exp(i d^2 j l) = chirp(j) chirp(l) kernel(j - l), which
# turns it into one linear convolution.


@functools.lru_cache(maxsize=16)
def _bluestein(grid: Grid, sign: int) -> tuple[np.ndarray, np.ndarray, complex]:
    n = grid.n_points
    a, d = grid.q_min, grid.spacing
    j = np.arange(n)
    chirp = np.exp(sign * 1j * (a * d * j + 0.5 * d * d * j * j))
    m = 2 * n
    kernel = np.zeros(m, dtype=np.complex128)
    tail = np.exp(-sign * 0.5j * d * d * j * j)
    kernel[:n] = tail
    kernel[m - n + 1 :] = tail[1:][::-1]
    pref = complex(np.exp(sign * 1j * a * a)) * d / math.sqrt(2.0 * np.pi)
    return chirp, np.fft.fft(kernel), pref


def fourier(wf: WaveFunction, direction: Direction) -> WaveFunction:
    """Unitary Fourier transform evaluated on the same symmetric grid.

    FORWARD maps the position representation psi(s) to the wave function of
    the rotated state, integral ds exp(+i t s) psi(s) / sqrt(2 pi); INVERSE
    uses the conjugate kernel.  INVERSE also yields the momentum-space wave
    function of the unrotated state.
    """
    if not wf.grid.is_symmetric():
        raise AsymmetricGrid("fourier requires a grid symmetric about q = 0")
    sign = 1 if direction is Direction.FORWARD else -1
    chirp, kernel_hat, pref = _bluestein(wf.grid, sign)
    n = wf.grid.n_points
    padded = np.zeros(2 * n, dtype=np.complex128)
    padded[:n] = wf.amps * chirp
    conv = np.fft.ifft(np.fft.fft(padded) * kernel_hat)[:n]
    return WaveFunction(wf.grid, pref * chirp * conv)


def displace(
    wf: WaveFunction,
    kind: DisplaceKind,
    amount: float,
    check_support: bool = True,
) -> WaveFunction:
    """X(s): psi(q) -> psi(q - s), or Z(s): psi(q) -> exp(i s q) psi(q).

    Position shifts go through a spectral phase ramp, exact for any real
    shift, with an edge check unless ``check_support`` is off.  The Weyl
    relation Z(s) X(t) = exp(i s t) X(t) Z(s) holds exactly.
    """
    if kind is DisplaceKind.MOMENTUM:
        return WaveFunction(wf.grid, wf.amps * np.exp(1j * amount * wf.grid.q))
    n = wf.grid.n_points
    freq = 2.0 * np.pi * np.fft.fftfreq(n, wf.grid.spacing)
    shifted = np.fft.ifft(np.fft.fft(wf.amps) * np.exp(-1j * freq * amount))
    if check_support:
        _check_support(shifted, wf.grid, f"displace(POSITION, {amount:g})")
    return WaveFunction(wf.grid, shifted)


def inner(a: WaveFunction, b: WaveFunction) -> complex:
    """Trapezoidal <a|b> on the shared grid."""
    if a.grid != b.grid:
        raise GridMismatch("inner product needs both states on one grid")
    return complex(np.sum(np.conj(a.amps) * b.amps * a.grid.trapezoid_weights))


def position_moments(wf: WaveFunction) -> tuple[float, float]:
    """Mean and variance of q in the (not necessarily normalized) state."""
    w = wf.grid.trapezoid_weights
    dens = wf.density()
    total = float(np.sum(dens * w))
    mean = float(np.sum(wf.grid.q * dens * w)) / total
    var = float(np.sum((wf.grid.q - mean) ** 2 * dens * w)) / total
    return mean, var


def momentum_moments(wf: WaveFunction) -> tuple[float, float]:
    """Mean and variance of p, via the momentum-space density."""
    return position_moments(fourier(wf, Direction.INVERSE))
