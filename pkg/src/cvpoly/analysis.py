"""Fidelities, input sweeps, and Wigner-function diagnostics."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .counting import CountingConfig, counting_chain
from .errors import AsymmetricGrid
from .gates import DiagonalUnitary, MonomialPlan, apply_diagonal, cubic_gate
from .states import (
    Grid,
    WaveFunction,
    coherent_state,
    fock_state,
    inner,
)
from .subtraction import (
    OutcomeEnsemble,
    SubtractionConfig,
    postselect_ensemble,
    postselected_fidelity,
    subtraction_chain_exact,
)

# Negative Wigner patches shallower than this fraction of the peak are noise.
NEGATIVE_REGION_THRESHOLD = 1e-3


class InputFamily(enum.Enum):
    """Sweep families: Fock |n> with x = n, coherent with x = |alpha|**2."""

    FOCK = "fock"
    COHERENT = "coherent"


def input_state(family: InputFamily, x: float, grid: Grid) -> WaveFunction:
    if family is InputFamily.FOCK:
        return fock_state(int(round(x)), grid)
    return coherent_state(complex(math.sqrt(x)), grid)


def fidelity_pure(a: WaveFunction, b: WaveFunction) -> float:
    """|<a|b>| with both sides normalized."""
    return abs(inner(a, b)) / math.sqrt(a.norm_sq() * b.norm_sq())


def fidelity_mixed(target: WaveFunction, ensemble: OutcomeEnsemble) -> float:
    """Fidelity of a pure target against a post-selected outcome mixture."""
    return postselected_fidelity(target, ensemble)


def gate_target(gate: DiagonalUnitary, wf: WaveFunction) -> WaveFunction:
    """The exact gate applied to the input; stays normalized."""
    return apply_diagonal(wf, gate)


def bare_polynomial_fidelity(gate: DiagonalUnitary, plan: MonomialPlan, wf: WaveFunction) -> float:
    """Fidelity of the normalized factored polynomial against the exact gate.

    Measurement-free ceiling of every protocol: at strength 0 it is one and
    it decreases as either the input photon content or the strength grows.
    """
    exact = gate_target(gate, wf)
    approx = apply_diagonal(wf, plan.polynomial_values)
    return fidelity_pure(exact, approx)


@dataclass(frozen=True)
class FidelityCurve:
    """One sweep: fidelity (and optionally success probability) against x."""

    family: InputFamily
    x: tuple[float, ...]
    fidelity: tuple[float, ...]
    success: tuple[float, ...] | None = None
    label: str = ""


def sweep_bare(
    strength: float, order: int, family: InputFamily, xs, grid: Grid
) -> FidelityCurve:
    from .gates import taylor_factorize

    gate = cubic_gate(strength)
    plan = taylor_factorize(gate, order)
    fids = tuple(
        bare_polynomial_fidelity(gate, plan, input_state(family, x, grid)) for x in xs
    )
    return FidelityCurve(family, tuple(float(x) for x in xs), fids, None, f"bare nu={strength:g}")


def sweep_subtraction_exact(
    config: SubtractionConfig, strength: float, family: InputFamily, xs, grid: Grid
) -> FidelityCurve:
    gate = cubic_gate(strength)
    fids = []
    for x in xs:
        wf = input_state(family, x, grid)
        out = subtraction_chain_exact(wf, config)
        fids.append(fidelity_pure(gate_target(gate, wf), out))
    return FidelityCurve(
        family, tuple(float(x) for x in xs), tuple(fids), None,
        f"subtraction {config.squeezing_db:g} dB",
    )


def sweep_subtraction_postselected(
    config: SubtractionConfig, strength: float, family: InputFamily, xs, grid: Grid
) -> FidelityCurve:
    gate = cubic_gate(strength)
    fids, probs = [], []
    for x in xs:
        wf = input_state(family, x, grid)
        ensemble = postselect_ensemble(wf, config)
        fids.append(postselected_fidelity(gate_target(gate, wf), ensemble))
        probs.append(ensemble.region_prob)
    return FidelityCurve(
        family, tuple(float(x) for x in xs), tuple(fids), tuple(probs),
        f"subtraction {config.squeezing_db:g} dB delta={config.delta:g}",
    )


def sweep_counting(
    config: CountingConfig, strength: float, family: InputFamily, xs, grid: Grid
) -> FidelityCurve:
    gate = cubic_gate(strength)
    fids, probs = [], []
    for x in xs:
        wf = input_state(family, x, grid)
        out, success = counting_chain(wf, config)
        fids.append(fidelity_pure(gate_target(gate, wf), out))
        probs.append(success)
    return FidelityCurve(
        family, tuple(float(x) for x in xs), tuple(fids), tuple(probs),
        f"counting {config.squeezing_db:g} dB",
    )


# --- Wigner function --------------------------------------------------------


@dataclass(frozen=True)
class WignerGrid:
    """W sampled on a rectangle; ``values[i, j]`` = W(q_axis[j], p_axis[i])."""

    q_axis: np.ndarray
    p_axis: np.ndarray
    values: np.ndarray


def wigner_complex(wf: WaveFunction, q_axis, p_axis) -> np.ndarray:
    """W(q, p) = (1/pi) integral dy psi*(q+y) psi(q-y) exp(2ipy), pre real cast.

    For each requested q the state is recentered by an exact spectral shift,
    so psi(q +- y) becomes a plain reversed-index product on the symmetric
    grid and both axes may take arbitrary values.  The shift runs on a
    zero-padded copy so support leaving the window is dropped rather than
    wrapped back in.  The imaginary parts are a discretization residual near
    machine precision.
    """
    if not wf.grid.is_symmetric():
        raise AsymmetricGrid("wigner needs the symmetric grid's exact +-y pairs")
    y = wf.grid.q
    weights = wf.grid.trapezoid_weights
    qs = np.atleast_1d(np.asarray(q_axis, dtype=float))
    n = y.size
    padded = np.zeros(2 * n, dtype=np.complex128)
    padded[:n] = wf.amps
    spectrum = np.fft.fft(padded)
    freq = 2.0 * np.pi * np.fft.fftfreq(2 * n, wf.grid.spacing)
    corr = np.empty((n, qs.size), dtype=np.complex128)
    for col, q in enumerate(qs):
        centered = np.fft.ifft(spectrum * np.exp(1j * freq * q))[:n]
        corr[:, col] = np.conj(centered) * centered[::-1] * weights
    phases = np.exp(2j * np.outer(np.atleast_1d(np.asarray(p_axis, float)), y))
    return phases @ corr / math.pi


def wigner(wf: WaveFunction, q_axis, p_axis) -> WignerGrid:
    """Real Wigner function on the requested axes."""
    values = wigner_complex(wf, q_axis, p_axis)
    return WignerGrid(
        np.atleast_1d(np.asarray(q_axis, float)),
        np.atleast_1d(np.asarray(p_axis, float)),
        values.real,
    )


def count_negative_regions(
    grid: WignerGrid, threshold: float = NEGATIVE_REGION_THRESHOLD
) -> int:
    """Number of 4-connected patches more negative than -threshold * peak."""
    cut = -threshold * float(np.max(grid.values))
    _, num = ndimage.label(grid.values < cut)
    return int(num)
