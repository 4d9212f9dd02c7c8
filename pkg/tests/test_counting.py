"""Counting chain: heralded fidelities, click statistics, conventions."""

import numpy as np
import pytest

from cvpoly import (
    DEFAULT_GRID,
    InputFamily,
    SqueezeAxis,
    db_to_width,
    fidelity_pure,
    fock_state,
    gate_target,
    input_state,
)
from cvpoly.counting import (
    CountingConfig,
    count_probability,
    counting_chain,
    counting_step,
)

HEADLINE_FIDELITY = 0.928440179266
HEADLINE_SUCCESS = 0.005961696901235973

# Fock sweep at 5 dB: (fidelity, success), n = 0..10
SWEEP_5DB = (
    (0.98353398208743303, 0.0081236284166256219),
    (0.95585664586318331, 0.0048248107936686782),
    (0.89129577536752558, 0.0036540701259459981),
    (0.82521479308815304, 0.0030495759221063788),
    (0.75109757975313207, 0.0026434063587250272),
    (0.67221238074402145, 0.0023553648455960016),
    (0.60951057679414511, 0.0021436758606968808),
    (0.57690577200303739, 0.0019812869119809583),
    (0.56805438401553476, 0.0018517128024592164),
    (0.56484805551501982, 0.0017450481951364399),
    (0.55437540281232633, 0.0016551330740845803),
)

# Fock fidelities at 20 dB cross below the 5 dB curve at n = 3
SWEEP_20DB_FIDELITY = (
    0.99884087788836562,
    0.986607874719585,
    0.93444444284154471,
    0.80397344128015069,
    0.57415974840354478,
)


def test_headline_chain(plan, gate, protocol_input):
    out, success = counting_chain(protocol_input, CountingConfig(plan, 5.0))
    fid = fidelity_pure(gate_target(gate, protocol_input), out)
    assert fid == pytest.approx(HEADLINE_FIDELITY, abs=1e-9)
    assert success == pytest.approx(HEADLINE_SUCCESS, rel=1e-9)


def test_chain_equals_explicit_steps(plan, protocol_input):
    config = CountingConfig(plan, 5.0)
    chained, success = counting_chain(protocol_input, config)
    cur, product = protocol_input, 1.0
    for anc in config.ancillae():
        cur, p_click = counting_step(cur, anc)
        product *= p_click
    assert fidelity_pure(chained, cur) == pytest.approx(1.0, abs=1e-12)
    assert success == pytest.approx(product, rel=1e-12)


def test_ancilla_displacements_invert_roots(plan):
    """q0 = w^2 Im(root)/2 and p0 = -Re(root), one ancilla per root."""
    config = CountingConfig(plan, 5.0)
    wsq = config.width**2
    for root, anc in zip(plan.roots, config.ancillae()):
        assert anc.q_center == pytest.approx(wsq * root.imag / 2.0, abs=1e-12)
        assert anc.p_center == pytest.approx(-root.real, abs=1e-12)


def test_click_distribution_complete(plan):
    anc = CountingConfig(plan, 5.0).ancillae()[0]
    total = sum(count_probability(fock_state(0), anc, n) for n in range(40))
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("n", range(0, 11, 2))
def test_fock_sweep_5db_frozen(plan, gate, n):
    wf = input_state(InputFamily.FOCK, float(n), DEFAULT_GRID)
    out, success = counting_chain(wf, CountingConfig(plan, 5.0))
    fid_expected, success_expected = SWEEP_5DB[n]
    assert fidelity_pure(gate_target(gate, wf), out) == pytest.approx(fid_expected, abs=1e-9)
    assert success == pytest.approx(success_expected, rel=1e-9)


def test_success_decreasing_in_photon_number_5db(plan):
    successes = [s for _, s in SWEEP_5DB]
    recomputed = [
        counting_chain(
            input_state(InputFamily.FOCK, float(n), DEFAULT_GRID), CountingConfig(plan, 5.0)
        )[1]
        for n in range(11)
    ]
    assert np.allclose(recomputed, successes, rtol=1e-9)
    assert all(a > b for a, b in zip(recomputed, recomputed[1:]))


def test_squeezing_crossover_at_fock_three(plan, gate):
    """More squeezing wins on small n and loses from n = 3 on."""
    for n, f20_expected in enumerate(SWEEP_20DB_FIDELITY):
        wf = input_state(InputFamily.FOCK, float(n), DEFAULT_GRID)
        target = gate_target(gate, wf)
        f20 = fidelity_pure(target, counting_chain(wf, CountingConfig(plan, 20.0))[0])
        f5 = SWEEP_5DB[n][0]
        assert f20 == pytest.approx(f20_expected, abs=1e-9)
        assert (f20 > f5) == (n < 3)


def test_negative_db_means_momentum_convention(plan):
    config = CountingConfig(plan, -5.0)
    assert config.width == pytest.approx(db_to_width(5.0, SqueezeAxis.MOMENTUM), abs=1e-12)


def test_fock_check_depth_guard(plan):
    with pytest.raises(ValueError):
        CountingConfig(plan, 5.0, max_fock_check=1)
