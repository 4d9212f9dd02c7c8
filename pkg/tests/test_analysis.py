"""Fidelity sweeps, their measured shapes, and the Wigner diagnostics."""

import math

import numpy as np
import pytest

from cvpoly import (
    DEFAULT_GRID,
    Grid,
    InputFamily,
    SqueezedParams,
    coherent_state,
    cubic_gate,
    fock_state,
    input_state,
    taylor_factorize,
)
from cvpoly.analysis import (
    bare_polynomial_fidelity,
    count_negative_regions,
    fidelity_mixed,
    fidelity_pure,
    gate_target,
    sweep_bare,
    sweep_counting,
    sweep_subtraction_exact,
    wigner,
)
from cvpoly.counting import CountingConfig, counting_chain
from cvpoly.errors import AsymmetricGrid
from cvpoly.subtraction import SubtractionConfig, postselect_ensemble, postselected_fidelity
from cvpoly.subtraction import subtraction_chain_exact

BARE_PROTOCOL_INPUT = 0.8016873302327374

# nu = 0.1 sweeps over x = 0..10; the Fock curve rebounds after its floor
BARE_FOCK_01 = (
    0.99839514265868978,
    0.98321107898511306,
    0.92316343054794758,
    0.781268292592876,
    0.54160632866194658,
    0.24140358111082341,
    0.019271004296578544,
    0.1287514222620775,
    0.05345535130484063,
    0.1137250726908508,
    0.21241595814461026,
)
BARE_COHERENT_01 = (
    0.99839514265868978,
    0.86351320676444077,
    0.62182304396173294,
    0.41139870207681706,
    0.26051327200029811,
    0.15972811362515646,
    0.095237898751791839,
    0.055366328386531737,
    0.031446718774387553,
    0.017480818332530148,
    0.0095253130902912559,
)


def test_input_families():
    assert abs(
        np.vdot(
            input_state(InputFamily.FOCK, 2.0, DEFAULT_GRID).amps,
            fock_state(2).amps,
        )
    ) > 0.0
    wf = input_state(InputFamily.COHERENT, 2.25, DEFAULT_GRID)
    assert fidelity_pure(wf, coherent_state(1.5)) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_pure_scale_invariant(gate):
    a = coherent_state(0.4)
    b = gate_target(gate, a)
    scaled = type(a)(a.grid, 2.5 * a.amps)
    assert fidelity_pure(a, b) == pytest.approx(fidelity_pure(scaled, b), abs=1e-12)


def test_bare_fidelity_on_protocol_input(gate, plan, protocol_input):
    fid = bare_polynomial_fidelity(gate, plan, protocol_input)
    assert fid == pytest.approx(BARE_PROTOCOL_INPUT, abs=1e-10)


def test_bare_fock_sweep_frozen(gate, plan):
    fids = [
        bare_polynomial_fidelity(gate, plan, input_state(InputFamily.FOCK, float(n), DEFAULT_GRID))
        for n in range(11)
    ]
    assert np.allclose(fids, BARE_FOCK_01, atol=1e-10)
    # monotone decrease holds only until the overlap integrand's first
    # oscillation: strict through n = 6, then the curve rebounds
    assert all(a > b for a, b in zip(fids[:7], fids[1:7]))
    assert fids[7] > fids[6]


def test_bare_coherent_sweep_frozen(gate, plan):
    fids = [
        bare_polynomial_fidelity(
            gate, plan, input_state(InputFamily.COHERENT, float(x), DEFAULT_GRID)
        )
        for x in range(11)
    ]
    assert np.allclose(fids, BARE_COHERENT_01, atol=1e-10)
    assert all(a > b for a, b in zip(fids, fids[1:]))


@pytest.mark.parametrize("n", range(4))
def test_bare_strength_ordering_low_fock(n):
    """Weaker gates approximate better, on inputs below the fidelity floor."""
    wf = fock_state(n)
    fids = []
    for nu in (0.1, 0.2, 0.5):
        gate = cubic_gate(nu)
        fids.append(bare_polynomial_fidelity(gate, taylor_factorize(gate, 1), wf))
    assert fids[0] > fids[1] > fids[2]


def test_sweep_bare_wrapper(gate):
    curve = sweep_bare(0.1, 1, InputFamily.FOCK, range(3), DEFAULT_GRID)
    assert curve.family is InputFamily.FOCK
    assert curve.x == (0.0, 1.0, 2.0)
    assert curve.success is None
    assert np.allclose(curve.fidelity, BARE_FOCK_01[:3], atol=1e-10)


def test_sweep_counting_wrapper(plan, gate):
    config = CountingConfig(plan, 5.0)
    curve = sweep_counting(config, 0.1, InputFamily.FOCK, [1.0], DEFAULT_GRID)
    wf = fock_state(1)
    out, success = counting_chain(wf, config)
    assert curve.fidelity[0] == pytest.approx(
        fidelity_pure(gate_target(gate, wf), out), abs=1e-12
    )
    assert curve.success[0] == pytest.approx(success, rel=1e-12)


def test_sweep_subtraction_wrapper(plan, protocol_input, gate):
    config = SubtractionConfig(plan, 5.0, 0.1, (0.0, 0.0, 0.0))
    curve = sweep_subtraction_exact(config, 0.1, InputFamily.COHERENT, [1.0], DEFAULT_GRID)
    wf = coherent_state(1.0)
    expected = fidelity_pure(gate_target(gate, wf), subtraction_chain_exact(wf, config))
    assert curve.fidelity[0] == pytest.approx(expected, abs=1e-12)


def test_fidelity_mixed_is_postselected(plan, gate):
    wf = coherent_state(0.5)
    config = SubtractionConfig(plan, 5.0, 0.1, (0.0, 0.0, 0.0), 4)
    ensemble = postselect_ensemble(wf, config)
    target = gate_target(gate, wf)
    assert fidelity_mixed(target, ensemble) == pytest.approx(
        postselected_fidelity(target, ensemble), abs=0
    )


# --- Wigner ------------------------------------------------------------------


def test_wigner_vacuum_peak():
    wg = wigner(fock_state(0), [0.0], [0.0])
    assert wg.values[0, 0] == pytest.approx(1.0 / math.pi, abs=1e-12)
    assert count_negative_regions(wigner(fock_state(0), np.linspace(-4, 4, 81), np.linspace(-4, 4, 81))) == 0


def test_wigner_fock_one_negative_core():
    axis = np.linspace(-4.0, 4.0, 81)
    wg = wigner(fock_state(1), axis, axis)
    center = wigner(fock_state(1), [0.0], [0.0]).values[0, 0]
    assert center == pytest.approx(-1.0 / math.pi, abs=1e-12)
    assert wg.values.min() == pytest.approx(-1.0 / math.pi, abs=1e-6)
    assert count_negative_regions(wg) == 1


def test_wigner_axis_orientation():
    """values[i, j] pairs p_axis[i] with q_axis[j]; peak sits at (sqrt 2, 0)."""
    wf = coherent_state(1.0)
    q_axis = np.linspace(0.0, 3.0, 61)
    p_axis = np.linspace(-1.0, 1.0, 21)
    wg = wigner(wf, q_axis, p_axis)
    i, j = np.unravel_index(np.argmax(wg.values), wg.values.shape)
    assert q_axis[j] == pytest.approx(math.sqrt(2.0), abs=0.06)
    assert p_axis[i] == pytest.approx(0.0, abs=0.06)


def test_wigner_marginal_recovers_density():
    wf = coherent_state(0.8 - 0.3j)
    # sample exact grid nodes so the reference needs no interpolation
    idx = np.arange(1740, 2360, 25)
    q_axis = wf.grid.q[idx]
    p_axis = np.linspace(-8.0, 8.0, 641)
    wg = wigner(wf, q_axis, p_axis)
    marginal = np.trapezoid(wg.values, p_axis, axis=0)
    assert np.max(np.abs(marginal - wf.density()[idx])) < 1e-8


def test_wigner_normalized():
    axis = np.linspace(-7.0, 7.0, 281)
    wg = wigner(coherent_state(0.8), axis, axis)
    total = np.trapezoid(np.trapezoid(wg.values, axis, axis=0), axis)
    assert total == pytest.approx(1.0, abs=1e-8)


def test_wigner_demands_symmetric_grid():
    wf = coherent_state(0.2, Grid(-10.0, 14.0, 512))
    with pytest.raises(AsymmetricGrid):
        wigner(wf, [0.0], [0.0])


def test_protocol_outputs_negative_regions(plan, gate, protocol_input):
    """Exact target shows 4 negative patches, either protocol keeps 3."""
    axis = np.linspace(-5.0, 5.0, 161)
    target = gate_target(gate, protocol_input)
    sub_out = subtraction_chain_exact(
        protocol_input, SubtractionConfig(plan, 5.0, 0.1, (0.0, 0.0, 0.0))
    )
    count_out, _ = counting_chain(protocol_input, CountingConfig(plan, 5.0))
    assert count_negative_regions(wigner(target, axis, axis)) == 4
    assert count_negative_regions(wigner(sub_out, axis, axis)) == 3
    assert count_negative_regions(wigner(count_out, axis, axis)) == 3
