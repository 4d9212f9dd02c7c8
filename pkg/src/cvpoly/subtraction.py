"""Monomial application by photon subtraction and homodyne post-selection.

One step couples the input through a CZ gate to a photon-subtracted
Gaussian ancilla and measures p on the input mode.  Conditioned on the
outcome m the surviving mode carries envelope * (q - root(m)) applied to
the input, with the root solvable for any target monomial.  The target is
reached only at the nominal outcome, so runs are post-selected on a window
around it; this module provides the exact-outcome chain, the outcome
distribution both by grid quadrature and by an analytic Gaussian-moment
route, the post-selected outcome ensemble with its region probability, and
the ancilla-displacement scan that trades fidelity for success rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import hermite as nherm

from .errors import EmptyEnsemble, EmptyScanRange, UnsupportedInput, ZeroAncilla
from .gates import MonomialPlan, apply_effective_block, subtraction_block
from .states import (
    Direction,
    DisplaceKind,
    Ladder,
    SqueezeAxis,
    SqueezedParams,
    WaveFunction,
    apply_ladder,
    db_to_width,
    displace,
    fourier,
    inner,
    squeezed_state,
)

# Squared norm below which the photon-subtracted ancilla counts as vanished.
ANCILLA_FLOOR = 1e-12


@dataclass(frozen=True)
class SubtractionConfig:
    """Chain parameters: plan, ancilla squeezing, and the selection window.

    ``squeezing_db`` uses the momentum-squeezed convention (width > sqrt(2)).
    ``nominal_outcomes`` holds the homodyne value each step is steered to;
    the acceptance windows are [m_j - delta, m_j + delta].
    """

    plan: MonomialPlan
    squeezing_db: float
    delta: float
    nominal_outcomes: tuple[float, ...]
    nodes_per_dim: int = 8

    def __post_init__(self) -> None:
        outcomes = tuple(float(m) for m in self.nominal_outcomes)
        if len(outcomes) != self.plan.degree_l:
            raise ValueError("need one nominal outcome per monomial root")
        object.__setattr__(self, "nominal_outcomes", outcomes)

    @property
    def width(self) -> float:
        return db_to_width(self.squeezing_db, SqueezeAxis.MOMENTUM)

    def ancillae(self) -> tuple[SqueezedParams, ...]:
        from .gates import solve_ancilla_subtraction

        return tuple(
            solve_ancilla_subtraction(root, self.width, m)
            for root, m in zip(self.plan.roots, self.nominal_outcomes)
        )


@dataclass(frozen=True)
class OutcomeEntry:
    outcomes: tuple[float, ...]
    state: WaveFunction | None
    density: float
    quad_weight: float


@dataclass(frozen=True)
class OutcomeEnsemble:
    """Post-selected mixture: quadrature nodes with densities and states."""

    entries: tuple[OutcomeEntry, ...]
    region_prob: float


def subtraction_step(
    wf: WaveFunction, ancilla: SqueezedParams, outcome: float
) -> tuple[WaveFunction, complex]:
    """One protocol step at a given homodyne outcome.

    The literal circuit (inverse Fourier pre-rotation, CZ, p measurement on
    the input mode, corrective X and Z displacements) collapses to the
    diagonal effective block; the pre-rotation exactly cancels the Fourier
    gate hidden in the momentum read-out.  Returns the normalized output and
    the realized root, which moves by -eps when the outcome moves by +eps.
    """
    block = subtraction_block(ancilla, outcome)
    out, _ = apply_effective_block(wf, block)
    return out, block.root


def homodyne_pdf(wf: WaveFunction, ancilla: SqueezedParams) -> Callable[[float], float]:
    """Outcome density of one step on ``wf`` as a function of m.

    Evaluates p(m) = integral dx mom(m - x) omega(x), where mom is the
    momentum-space density of the Fourier-pre-rotated input and omega the
    position density of the normalized photon-subtracted ancilla.  The
    off-grid shift of mom is done spectrally, so each call costs one FFT
    pair and the density integrates to one over outcomes.
    """
    anc = squeezed_state(ancilla, wf.grid)
    subtracted = apply_ladder(anc, Ladder.ANNIHILATE)
    weight = subtracted.norm_sq()
    if weight < ANCILLA_FLOOR:
        raise ZeroAncilla("photon subtraction on the vacuum yields no state")
    omega = subtracted.density() / weight

    rotated = fourier(wf, Direction.INVERSE)
    mom = fourier(rotated, Direction.INVERSE)
    # mom(m - x) sampled on the grid is the reflected amplitude shifted by m
    reflected = WaveFunction(wf.grid, mom.amps[::-1])
    quad = omega * wf.grid.trapezoid_weights

    def pdf(m: float) -> float:
        shifted = displace(reflected, DisplaceKind.POSITION, float(m), check_support=False)
        return float(np.sum(shifted.density() * quad))

    return pdf


@dataclass(frozen=True)
class CoherentInput:
    alpha: complex


@dataclass(frozen=True)
class FockInput:
    n: int


def _gauss_poly_integral(a: float, center: float, poly: Polynomial) -> float:
    """integral exp(-a (x - center)**2) P(x) dx via centered Gaussian moments."""
    shifted = poly(Polynomial([center, 1.0]))
    sigma_sq = 1.0 / (2.0 * a)
    total, moment = 0.0, 1.0
    coeffs = shifted.coef
    for j in range(0, coeffs.size, 2):
        total += float(np.real(coeffs[j])) * moment
        moment *= sigma_sq * (j + 1)  # next even moment: sigma**(j+2) (j+1)!!
    return math.sqrt(math.pi / a) * total


def gaussian_moment_pdf(
    input_kind: CoherentInput | FockInput,
    ancilla: SqueezedParams,
    outcome: float,
) -> float:
    """Analytic outcome density for coherent or Fock inputs.

    Writes both densities as Gaussian times polynomial, completes the square
    of the product, and sums polynomial coefficients against the centered
    Gaussian moments (odd vanish, even give sigma**j (j-1)!!).  Matches
    :func:`homodyne_pdf` to quadrature accuracy but costs no transforms.
    """
    if isinstance(input_kind, CoherentInput):
        in_a = 1.0
        in_center = math.sqrt(2.0) * input_kind.alpha.real + outcome
        in_poly = Polynomial([1.0])
    elif isinstance(input_kind, FockInput):
        herm = Polynomial(nherm.herm2poly([0.0] * input_kind.n + [1.0]))
        in_a = 1.0
        in_center = float(outcome)
        in_poly = herm(Polynomial([-outcome, 1.0])) ** 2
    else:
        raise UnsupportedInput("analytic route covers coherent and Fock inputs only")

    wsq = ancilla.width**2
    q0, p0 = ancilla.q_center, ancilla.p_center
    anc_a = 2.0 / wsq
    lin = Polynomial([2.0 * q0 / wsq, 1.0 - 2.0 / wsq])
    anc_poly = lin**2 + Polynomial([p0 * p0])

    anc_norm = _gauss_poly_integral(anc_a, q0, anc_poly)
    if anc_norm < ANCILLA_FLOOR:
        raise ZeroAncilla("photon subtraction on the vacuum yields no state")
    in_norm = _gauss_poly_integral(in_a, in_center, in_poly)

    a_tot = in_a + anc_a
    center = (in_a * in_center + anc_a * q0) / a_tot
    prefactor = math.exp(-in_a * anc_a * (in_center - q0) ** 2 / a_tot)
    joint = prefactor * _gauss_poly_integral(a_tot, center, in_poly * anc_poly)
    return joint / (in_norm * anc_norm)


def subtraction_chain_exact(wf: WaveFunction, config: SubtractionConfig) -> WaveFunction:
    """Run every step at its nominal outcome; realizes the plan's monomials."""
    cur = wf
    for ancilla, m in zip(config.ancillae(), config.nominal_outcomes):
        cur, _ = subtraction_step(cur, ancilla, m)
    return cur


def _window_nodes(center: float, delta: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(n)
    return center + delta * x, delta * w


def _outcome_tree(
    wf: WaveFunction, config: SubtractionConfig, keep_states: bool
) -> OutcomeEnsemble:
    if config.plan.degree_l != 3:
        raise ValueError("post-selection ensembles are defined for three-root plans")
    ancillae = config.ancillae()
    entries: list[OutcomeEntry] = []

    def recurse(state: WaveFunction, level: int, ms: tuple[float, ...], dens: float, qw: float):
        ancilla = ancillae[level]
        pdf = homodyne_pdf(state, ancilla)
        nodes, weights = _window_nodes(config.nominal_outcomes[level], config.delta, config.nodes_per_dim)
        last = level == len(ancillae) - 1
        for m, w in zip(nodes, weights):
            d = dens * pdf(m)
            if last:
                leaf = subtraction_step(state, ancilla, m)[0] if keep_states else None
                entries.append(OutcomeEntry(ms + (float(m),), leaf, d, qw * w))
            else:
                nxt, _ = subtraction_step(state, ancilla, m)
                recurse(nxt, level + 1, ms + (float(m),), d, qw * w)

    recurse(wf, 0, (), 1.0, 1.0)
    region = float(sum(e.density * e.quad_weight for e in entries))
    return OutcomeEnsemble(tuple(entries), region)


def postselect_ensemble(wf: WaveFunction, config: SubtractionConfig) -> OutcomeEnsemble:
    """Tensor Gauss-Legendre discretization of the post-selection region.

    Chains the three steps over every node triple of the windows around the
    nominal outcomes, recording the conditional density chain
    p(m1) p(m2|m1) p(m3|m1,m2) and the final normalized states.
    """
    return _outcome_tree(wf, config, keep_states=True)


def success_probability(wf: WaveFunction, config: SubtractionConfig) -> float:
    """Probability that all three outcomes land inside their windows."""
    return _outcome_tree(wf, config, keep_states=False).region_prob


def postselected_fidelity(target: WaveFunction, ensemble: OutcomeEnsemble) -> float:
    """sqrt of the region-averaged squared overlap with the pure target."""
    if not ensemble.entries:
        raise EmptyEnsemble("ensemble holds no outcome entries")
    tnorm = math.sqrt(target.norm_sq())
    acc = 0.0
    for entry in ensemble.entries:
        if entry.state is None:
            raise EmptyEnsemble("ensemble was built without states")
        f = abs(inner(target, entry.state)) / tnorm
        acc += entry.density * entry.quad_weight * f * f
    return math.sqrt(acc / ensemble.region_prob)


def optimize_state_prep(
    wf: WaveFunction,
    plan: MonomialPlan,
    squeezing_db: float,
    delta: float,
    q0_scan: Sequence[float],
    nodes_per_dim: int = 8,
) -> SubtractionConfig:
    """Greedy per-step scan of the ancilla position displacement.

    Every candidate q0 realizes the same root provided the window is
    recentered at m = -Re(root) - 2 q0 / (w**2 - 2), so the scan moves the
    window toward the bulk of the outcome density without touching the
    target.  Steps are optimized in sequence, each advancing the chain at
    its chosen nominal outcome.
    """
    candidates = np.asarray(list(q0_scan), dtype=float)
    if candidates.size == 0:
        raise EmptyScanRange("q0 scan received no candidates")
    width = db_to_width(squeezing_db, SqueezeAxis.MOMENTUM)
    wsq = width * width
    chosen: list[float] = []
    cur = wf
    for root in plan.roots:
        p0 = -((wsq - 2.0) / wsq) * root.imag
        best_prob, best_m, best_anc = -1.0, 0.0, None
        for q0 in candidates:
            m_nom = -root.real - 2.0 * q0 / (wsq - 2.0)
            anc = SqueezedParams(complex(q0, p0) / math.sqrt(2.0), width)
            pdf = homodyne_pdf(cur, anc)
            nodes, weights = _window_nodes(m_nom, delta, nodes_per_dim)
            prob = float(sum(w * pdf(m) for m, w in zip(nodes, weights)))
            if prob > best_prob:
                best_prob, best_m, best_anc = prob, m_nom, anc
        chosen.append(best_m)
        cur, _ = subtraction_step(cur, best_anc, best_m)
    return SubtractionConfig(plan, squeezing_db, delta, tuple(chosen), nodes_per_dim)
