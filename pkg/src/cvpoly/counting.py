"""Monomial application heralded by single-photon counting.

One step couples the input through a CZ gate to a displaced
position-squeezed Gaussian ancilla and projects the ancilla on the
one-photon state.  Success applies envelope * (q - root) with the root set
by the ancilla displacement alone, so the chain is deterministic once the
detector clicks; the click probabilities are computed exactly from the
photon-number distribution of the coupled ancilla mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import MonomialPlan, apply_effective_block, counting_block, solve_ancilla_counting
from .states import (
    Direction,
    SqueezeAxis,
    SqueezedParams,
    WaveFunction,
    db_to_width,
    fock_state,
    fourier,
    squeezed_state,
)


@dataclass(frozen=True)
class CountingConfig:
    """Chain parameters; ``squeezing_db`` uses the position-squeezed
    convention (width < sqrt(2)).  ``max_fock_check`` is the depth used when
    diagnosing the click distribution's completeness."""

    plan: MonomialPlan
    squeezing_db: float
    max_fock_check: int = 2

    def __post_init__(self) -> None:
        if self.max_fock_check < 2:
            raise ValueError("max_fock_check must be at least 2")

    @property
    def width(self) -> float:
        return db_to_width(self.squeezing_db, SqueezeAxis.POSITION)

    def ancillae(self) -> tuple[SqueezedParams, ...]:
        return tuple(solve_ancilla_counting(root, self.width) for root in self.plan.roots)


def count_probability(wf: WaveFunction, ancilla: SqueezedParams, n: int) -> float:
    """Probability of reading n photons off the coupled ancilla mode.

    p(n) = integral dt |psi(t)|^2 |w_n(t)|^2 with the overlap kernel
    w_n(t) = integral ds phi_n(s) sigma(s) exp(i s t), evaluated as one
    Fourier transform of the pointwise product phi_n * sigma.  Summed over
    n the probabilities are complete.
    """
    anc = squeezed_state(ancilla, wf.grid)
    phi = fock_state(n, wf.grid)
    product = WaveFunction(wf.grid, phi.amps * anc.amps)
    kernel = fourier(product, Direction.FORWARD).amps * math.sqrt(2.0 * math.pi)
    integrand = wf.density() * np.abs(kernel) ** 2
    return float(np.sum(integrand * wf.grid.trapezoid_weights))


def counting_step(wf: WaveFunction, ancilla: SqueezedParams) -> tuple[WaveFunction, float]:
    """Apply one heralded block; returns the output and the click probability."""
    p_click = count_probability(wf, ancilla, 1)
    out, _ = apply_effective_block(wf, counting_block(ancilla))
    return out, p_click


def counting_chain(wf: WaveFunction, config: CountingConfig) -> tuple[WaveFunction, float]:
    """Run all monomial steps; success probability is the product of the
    per-step click probabilities, each taken on the current normalized state."""
    cur, success = wf, 1.0
    for ancilla in config.ancillae():
        cur, p_click = counting_step(cur, ancilla)
        success *= p_click
    return cur, success
