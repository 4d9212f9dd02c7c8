"""Brute-force two-mode circuit simulation.

Ground truth for the effective-block picture: build the explicit two-mode
wave function, apply the CZ phase exp(i q1 q2) pointwise, contract the
measured mode against the homodyne or Fock read-out kernel, apply the
corrective displacements, and hand back the surviving single-mode state
with its outcome density.  Everything is plain dense quadrature, so it is
slow but has no modeling assumptions beyond the grids.
"""

from __future__ import annotations

import math

import numpy as np

from .gates import BlockKind
from .states import (
    Direction,
    DisplaceKind,
    Grid,
    Ladder,
    SqueezedParams,
    TwoModeState,
    WaveFunction,
    apply_ladder,
    displace,
    fock_state,
    fourier,
    squeezed_state,
)

ORACLE_GRID = Grid(-15.0, 15.0, 1024)


def make_product(wf1: WaveFunction, wf2: WaveFunction) -> TwoModeState:
    return TwoModeState(wf1.grid, wf2.grid, np.outer(wf1.amps, wf2.amps))


def apply_cz(state: TwoModeState) -> TwoModeState:
    """Controlled-Z: multiply by exp(i q1 q2)."""
    phase = np.exp(1j * np.outer(state.grid1.q, state.grid2.q))
    return TwoModeState(state.grid1, state.grid2, state.amps * phase)


def project_homodyne(state: TwoModeState, mode: int, outcome: float) -> tuple[WaveFunction, float]:
    """Contract one mode against the momentum eigenbra at ``outcome``.

    Returns the unnormalized remaining state and the outcome density, which
    integrates to one over outcomes when the input is normalized.
    """
    grid_m = state.grid1 if mode == 1 else state.grid2
    kernel = np.exp(-1j * outcome * grid_m.q) / math.sqrt(2.0 * np.pi)
    weights = kernel * grid_m.trapezoid_weights
    if mode == 1:
        remaining = WaveFunction(state.grid2, weights @ state.amps)
    else:
        remaining = WaveFunction(state.grid1, state.amps @ weights)
    return remaining, remaining.norm_sq()


def homodyne_scan(state: TwoModeState, mode: int) -> tuple[np.ndarray, np.ndarray]:
    """Outcome densities at every FFT-conjugate momentum value of one mode.

    One FFT along the measured axis replaces a kernel contraction per
    outcome; used for completeness checks, where the integral over the
    returned axis should be one.
    """
    grid_m = state.grid1 if mode == 1 else state.grid2
    n, d = grid_m.n_points, grid_m.spacing
    amps = state.amps if mode == 1 else state.amps.T
    # exp(-i m_k t_j) with t_j = q_min + j d and m_k = 2 pi k / (n d)
    transformed = np.fft.fft(amps, axis=0)
    m_vals = 2.0 * np.pi * np.fft.fftfreq(n, d)
    transformed *= np.exp(-1j * m_vals * grid_m.q_min)[:, None] * d / math.sqrt(2.0 * np.pi)
    other = state.grid2 if mode == 1 else state.grid1
    dens = np.abs(transformed) ** 2 @ other.trapezoid_weights
    order = np.argsort(m_vals)
    return m_vals[order], dens[order]


def project_fock(state: TwoModeState, mode: int, n: int) -> tuple[WaveFunction, float]:
    """Contract one mode against <n|; returns the remainder and the probability."""
    grid_m = state.grid1 if mode == 1 else state.grid2
    weights = fock_state(n, grid_m).amps.real * grid_m.trapezoid_weights
    if mode == 1:
        remaining = WaveFunction(state.grid2, weights @ state.amps)
    else:
        remaining = WaveFunction(state.grid1, state.amps @ weights)
    return remaining, remaining.norm_sq()


def reduced_purity(state: TwoModeState, mode: int) -> float:
    """Tr(rho_mode**2) by dense quadrature; 1 exactly for product states."""
    amps = state.amps if mode == 1 else state.amps.T
    other_w = (state.grid2 if mode == 1 else state.grid1).trapezoid_weights
    own_w = (state.grid1 if mode == 1 else state.grid2).trapezoid_weights
    rho = (amps * other_w) @ amps.conj().T
    return float(np.einsum("i,j,ij->", own_w, own_w, np.abs(rho) ** 2).real)


def circuit_step(
    wf: WaveFunction,
    kind: BlockKind,
    ancilla: SqueezedParams,
    outcome: float = 0.0,
    ancilla_grid: Grid | None = None,
    ladder: Ladder | None = Ladder.ANNIHILATE,
) -> tuple[WaveFunction, float]:
    """One full protocol step simulated as the literal circuit.

    PHOTON_SUBTRACTED: rotate the input by the inverse Fourier gate, couple
    via CZ to the ladder-modified Gaussian ancilla, measure p on the input
    mode at ``outcome``, then undo the displacements X(outcome) and
    Z(p_center) on the surviving mode.  Returns (normalized state, outcome
    density).

    SINGLE_PHOTON: couple via CZ to the plain Gaussian ancilla, project the
    ancilla mode on |1>, and undo Z(2 q_center / (2 + w**2)).  Returns
    (normalized state, click probability).  The corrective kick carries the
    factor two of the derived residual phase.
    """
    grid2 = ancilla_grid or wf.grid
    if kind is BlockKind.PHOTON_SUBTRACTED:
        rotated = fourier(wf, Direction.INVERSE)
        anc = squeezed_state(ancilla, grid2)
        if ladder is not None:
            anc, _ = apply_ladder(anc, ladder).normalized()
        joint = apply_cz(make_product(rotated, anc))
        out, density = project_homodyne(joint, mode=1, outcome=outcome)
        out = displace(out, DisplaceKind.POSITION, -outcome)
        out = displace(out, DisplaceKind.MOMENTUM, -ancilla.p_center)
        normalized, _ = out.normalized()
        return normalized, density
    joint = apply_cz(make_product(wf, squeezed_state(ancilla, grid2)))
    out, prob = project_fock(joint, mode=2, n=1)
    kick = 2.0 * ancilla.q_center / (2.0 + ancilla.width**2)
    out = displace(out, DisplaceKind.MOMENTUM, -kick)
    normalized, _ = out.normalized()
    return normalized, prob
