"""Brute-force circuit oracle against the closed-form effective blocks."""

import numpy as np
import pytest

from cvpoly import (
    BlockKind,
    Grid,
    SqueezeAxis,
    SqueezedParams,
    coherent_state,
    db_to_width,
    fock_state,
    inner,
    squeezed_state,
)
from cvpoly.counting import counting_step
from cvpoly.gates import solve_ancilla_counting, solve_ancilla_subtraction
from cvpoly.subtraction import subtraction_step
from cvpoly.twomode import (
    apply_cz,
    circuit_step,
    homodyne_scan,
    make_product,
    project_fock,
    project_homodyne,
    reduced_purity,
)

# wide enough for the 10 dB momentum-squeezed ancilla's support check
WIDE_GRID = Grid(-20.0, 20.0, 1024)

ROOT1 = complex(0.0, -(0.1 ** (-1.0 / 3.0)))


def _states():
    return (
        fock_state(0, WIDE_GRID),
        fock_state(1, WIDE_GRID),
        coherent_state(1.0, WIDE_GRID),
    )


def test_product_state_is_pure():
    joint = make_product(fock_state(0, WIDE_GRID), coherent_state(0.5, WIDE_GRID))
    assert joint.norm_sq() == pytest.approx(1.0, abs=1e-10)
    assert reduced_purity(joint, 1) == pytest.approx(1.0, abs=1e-10)


def test_cz_entangles_to_half_purity():
    """CZ on coherent x vacuum leaves each mode at purity 1/sqrt(2)."""
    joint = apply_cz(make_product(coherent_state(1.0, WIDE_GRID), fock_state(0, WIDE_GRID)))
    assert joint.norm_sq() == pytest.approx(1.0, abs=1e-10)
    expected = 1.0 / np.sqrt(2.0)
    assert reduced_purity(joint, 1) == pytest.approx(expected, abs=1e-9)
    assert reduced_purity(joint, 2) == pytest.approx(expected, abs=1e-9)


def test_homodyne_density_normalizes():
    joint = apply_cz(make_product(coherent_state(0.6, WIDE_GRID), fock_state(1, WIDE_GRID)))
    m_axis, density = homodyne_scan(joint, 1)
    assert float(np.trapezoid(density, m_axis)) == pytest.approx(1.0, abs=1e-9)
    # a scan point must agree with the single-outcome kernel contraction
    _, at_zero = project_homodyne(joint, 1, float(m_axis[np.argmin(np.abs(m_axis))]))
    idx = int(np.argmin(np.abs(m_axis)))
    assert at_zero == pytest.approx(float(density[idx]), abs=1e-10)


def test_fock_projections_complete():
    anc = squeezed_state(
        SqueezedParams(0.0, db_to_width(5.0, SqueezeAxis.POSITION)), WIDE_GRID
    )
    joint = apply_cz(make_product(coherent_state(1.0, WIDE_GRID), anc))
    # the click distribution tail decays slowly; 50 terms leave ~6e-10
    total = sum(project_fock(joint, 2, n)[1] for n in range(51))
    assert total == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("db", [1.0, 5.0, 10.0])
def test_subtraction_step_matches_circuit(db):
    """Closed-form step vs the literal circuit, overlap deficit at precision."""
    anc = solve_ancilla_subtraction(ROOT1, db_to_width(db, SqueezeAxis.MOMENTUM), 0.0)
    for wf in _states():
        closed, _ = subtraction_step(wf, anc, 0.0)
        brute, density = circuit_step(wf, BlockKind.PHOTON_SUBTRACTED, anc, outcome=0.0)
        assert abs(inner(closed, brute)) == pytest.approx(1.0, abs=1e-12)
        assert density > 0.0


def test_subtraction_step_matches_circuit_off_nominal():
    anc = solve_ancilla_subtraction(ROOT1, db_to_width(5.0, SqueezeAxis.MOMENTUM), 0.4)
    wf = coherent_state(0.5 + 0.8j, WIDE_GRID)
    closed, _ = subtraction_step(wf, anc, 0.4)
    brute, _ = circuit_step(wf, BlockKind.PHOTON_SUBTRACTED, anc, outcome=0.4)
    assert abs(inner(closed, brute)) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("db", [1.0, 5.0, 10.0])
def test_counting_step_matches_circuit(db):
    anc = solve_ancilla_counting(ROOT1, db_to_width(db, SqueezeAxis.POSITION))
    for wf in _states():
        closed, p_closed = counting_step(wf, anc)
        brute, p_brute = circuit_step(wf, BlockKind.SINGLE_PHOTON, anc)
        assert abs(inner(closed, brute)) == pytest.approx(1.0, abs=1e-12)
        assert p_closed == pytest.approx(p_brute, abs=1e-10)


def test_counting_click_probabilities_frozen():
    """First-step click probability at 5 dB for the three oracle inputs."""
    anc = solve_ancilla_counting(ROOT1, db_to_width(5.0, SqueezeAxis.POSITION))
    expected = (0.3140500, 0.2936851, 0.2681209)
    for wf, p_expected in zip(_states(), expected):
        _, p = counting_step(wf, anc)
        assert p == pytest.approx(p_expected, abs=1e-6)
