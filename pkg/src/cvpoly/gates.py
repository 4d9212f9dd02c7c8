"""Quadrature-diagonal gates, their Taylor factorization, and the
measurement-induced monomial blocks that realize the factors.

A diagonal unitary exp(-i t H(q)) truncated at Taylor order n is a degree
n * deg(H) polynomial in q, which factors into monomials (q - root_j).  Each
monomial is realized non-deterministically by coupling to a Gaussian
ancilla; the net effect of one such step is an "effective block": a Gaussian
envelope times (q - root), still diagonal in q.  Two ancilla read-outs are
covered: homodyne detection after photon subtraction, and single-photon
counting.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import IllConditioned, SingularAncilla
from .states import SqueezedParams, WaveFunction

# Ancilla width with w**2 = 2 (the coherent width) makes the subtraction
# protocol's root diverge; stay this far away from it.
WIDTH_SQ_GAP = 1e-6

MAX_FACTOR_DEGREE = 24


class BlockKind(enum.Enum):
    """Which ancilla read-out produced the block."""

    PHOTON_SUBTRACTED = "photon_subtracted"
    SINGLE_PHOTON = "single_photon"


@dataclass(frozen=True)
class DiagonalUnitary:
    """exp(-i * time * H(q)) with polynomial H given by ascending coefficients."""

    hamiltonian_coeffs: tuple[float, ...]
    time: float

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.hamiltonian_coeffs)
        if not coeffs or coeffs[-1] == 0.0:
            raise ValueError("leading Hamiltonian coefficient must be nonzero")
        object.__setattr__(self, "hamiltonian_coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.hamiltonian_coeffs) - 1

    def phase(self, q: np.ndarray) -> np.ndarray:
        """The unitary's diagonal values exp(-i t H(q))."""
        return np.exp(-1j * self.time * npoly.polyval(q, self.hamiltonian_coeffs))


def cubic_gate(strength: float) -> DiagonalUnitary:
    """exp(+i * strength * q**3), the canonical non-Gaussian test gate."""
    return DiagonalUnitary((0.0, 0.0, 0.0, 1.0), -strength)


@dataclass(frozen=True)
class MonomialPlan:
    """Factored Taylor polynomial: leading_coeff * prod_j (q - roots[j]).

    ``roots`` are sorted by (imag, real); ``order_n`` is the Taylor order and
    ``degree_l`` the polynomial degree, so the plan needs degree_l monomial
    steps.
    """

    roots: tuple[complex, ...]
    leading_coeff: complex
    order_n: int
    degree_l: int

    def polynomial_values(self, q: np.ndarray) -> np.ndarray:
        vals = np.full(np.shape(q), self.leading_coeff, dtype=np.complex128)
        for root in self.roots:
            vals *= q - root
        return vals


def taylor_factorize(gate: DiagonalUnitary, order: int) -> MonomialPlan:
    """Factor the order-n Taylor truncation of the gate into monomials.

    The truncation sum_{j<=n} (-i t H(q))**j / j! is assembled exactly, its
    roots come from the companion-matrix eigenvalues, and the factored form
    is compared back against the coefficient form at 20 Chebyshev points on
    [-5, 5]; relative disagreement above 1e-8 raises IllConditioned.
    """
    if order < 1:
        raise ValueError("Taylor order must be >= 1")
    degree = order * gate.degree
    if degree > MAX_FACTOR_DEGREE:
        raise ValueError(f"degree {degree} exceeds the supported {MAX_FACTOR_DEGREE}")

    ham = np.asarray(gate.hamiltonian_coeffs, dtype=np.complex128)
    coeffs = np.zeros(degree + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    term = np.ones(1, dtype=np.complex128)
    for j in range(1, order + 1):
        term = npoly.polymul(term, -1j * gate.time * ham)
        coeffs[: term.size] += term / math.factorial(j)

    roots = np.roots(coeffs[::-1])
    leading = complex(coeffs[-1])

    cheb = 5.0 * np.cos((2 * np.arange(20) + 1) * np.pi / 40.0)
    exact = npoly.polyval(cheb, coeffs)
    recon = np.full(20, leading, dtype=np.complex128)
    for r in roots:
        recon *= cheb - r
    scale = float(np.max(np.abs(exact)))
    residual = float(np.max(np.abs(recon - exact))) / scale
    if residual > 1e-8:
        raise IllConditioned(f"root reconstruction residual {residual:.2e}")

    # quantize the sort key so eigenvalue noise cannot flip near-ties
    ordered = tuple(
        sorted((complex(r) for r in roots), key=lambda z: (round(z.imag, 10), round(z.real, 10)))
    )
    return MonomialPlan(ordered, leading, order, degree)


def apply_diagonal(wf: WaveFunction, diag) -> WaveFunction:
    """Multiply pointwise by a DiagonalUnitary, a callable of q, or an array.

    Unitary input keeps the norm; a general diagonal factor (for example the
    monomial q - root) returns an unnormalized state.
    """
    if isinstance(diag, DiagonalUnitary):
        values = diag.phase(wf.grid.q)
    elif callable(diag):
        values = np.asarray(diag(wf.grid.q), dtype=np.complex128)
    else:
        values = np.asarray(diag, dtype=np.complex128)
    return WaveFunction(wf.grid, wf.amps * values)


@dataclass(frozen=True)
class EffectiveBlock:
    """One monomial step: envelope * (q - root), diagonal in q.

    The envelope is exp(-(q - envelope_center)**2 / envelope_width_sq).
    ``outcome`` is the homodyne read-out for PHOTON_SUBTRACTED blocks and
    unused for SINGLE_PHOTON ones.
    """

    kind: BlockKind
    ancilla: SqueezedParams
    outcome: float
    root: complex
    envelope_center: float
    envelope_width_sq: float

    def __post_init__(self) -> None:
        vals = (
            self.outcome,
            self.root.real,
            self.root.imag,
            self.envelope_center,
            self.envelope_width_sq,
        )
        if not all(math.isfinite(v) for v in vals):
            raise ValueError("block parameters must be finite")
        if not self.envelope_width_sq > 0:
            raise ValueError("envelope width must be positive")

    @property
    def width(self) -> float:
        return self.ancilla.width


def _require_nonsingular(width: float) -> float:
    wsq = width * width
    if abs(wsq - 2.0) <= WIDTH_SQ_GAP:
        raise SingularAncilla(f"width**2 = {wsq:g} too close to 2")
    return wsq


def subtraction_block(ancilla: SqueezedParams, outcome: float) -> EffectiveBlock:
    """Effective block of one photon-subtraction + homodyne step.

    With ancilla displacement (q0, p0), width w, and homodyne outcome m the
    realized monomial root is

        root = -2 q0 / (w**2 - 2) - i w**2 p0 / (w**2 - 2) - m,

    and the envelope is exp(-(q - q0 + m)**2 / w**2).
    """
    wsq = _require_nonsingular(ancilla.width)
    q0, p0 = ancilla.q_center, ancilla.p_center
    root = -2.0 * q0 / (wsq - 2.0) - 1j * wsq * p0 / (wsq - 2.0) - outcome
    return EffectiveBlock(
        kind=BlockKind.PHOTON_SUBTRACTED,
        ancilla=ancilla,
        outcome=outcome,
        root=root,
        envelope_center=q0 - outcome,
        envelope_width_sq=wsq,
    )


def counting_block(ancilla: SqueezedParams) -> EffectiveBlock:
    """Effective block of one single-photon-counting step.

    Root = 2i q0 / w**2 - p0; envelope exp(-w**2 (q + p0)**2 / (4 + 2 w**2)).
    """
    wsq = ancilla.width**2
    q0, p0 = ancilla.q_center, ancilla.p_center
    root = 2j * q0 / wsq - p0
    return EffectiveBlock(
        kind=BlockKind.SINGLE_PHOTON,
        ancilla=ancilla,
        outcome=0.0,
        root=root,
        envelope_center=-p0,
        envelope_width_sq=(4.0 + 2.0 * wsq) / wsq,
    )


def solve_ancilla_subtraction(root: complex, width: float, outcome: float) -> SqueezedParams:
    """Ancilla displacement that realizes ``root`` at the given outcome.

    Inverts the subtraction_block root formula:
    q0 = -(w**2 - 2)(Re root + m)/2 and p0 = -((w**2 - 2)/w**2) Im root.
    """
    wsq = _require_nonsingular(width)
    q0 = -(wsq - 2.0) * (root.real + outcome) / 2.0
    p0 = -((wsq - 2.0) / wsq) * root.imag
    return SqueezedParams(complex(q0, p0) / math.sqrt(2.0), width)


def solve_ancilla_counting(root: complex, width: float) -> SqueezedParams:
    """Ancilla displacement for the counting block: p0 = -Re root, q0 = w**2 Im root / 2."""
    wsq = width * width
    q0 = wsq * root.imag / 2.0
    p0 = -root.real
    return SqueezedParams(complex(q0, p0) / math.sqrt(2.0), width)


def apply_effective_block(wf: WaveFunction, block: EffectiveBlock) -> tuple[WaveFunction, float]:
    """Multiply by envelope * (q - root) and renormalize.

    Returns the normalized state and the discarded squared norm.  The weight
    absorbs every constant dropped in the block's derivation, so it is not a
    physical probability; probabilities come from the dedicated read-out
    distributions.
    """
    q = wf.grid.q
    envelope = np.exp(-((q - block.envelope_center) ** 2) / block.envelope_width_sq)
    raw = WaveFunction(wf.grid, wf.amps * envelope * (q - block.root))
    return raw.normalized()
