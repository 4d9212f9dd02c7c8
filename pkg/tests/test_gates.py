"""Factorization of the truncated gate and the per-step effective blocks."""

import math

import numpy as np
import pytest

from cvpoly import (
    DEFAULT_GRID,
    SqueezeAxis,
    SqueezedParams,
    cubic_gate,
    db_to_width,
    fock_state,
    inner,
    taylor_factorize,
)
from cvpoly.analysis import bare_polynomial_fidelity
from cvpoly.errors import SingularAncilla
from cvpoly.gates import (
    apply_diagonal,
    apply_effective_block,
    counting_block,
    solve_ancilla_counting,
    solve_ancilla_subtraction,
    subtraction_block,
)

# roots of 1 + i nu q^3 at nu = 0.1, sorted by (imag, real); radius nu**(-1/3)
ROOT_RADIUS = 2.154434690031884
FROZEN_ROOTS = (
    -2.1544346900318847j,
    -1.865795172362065 + 1.0772173450159426j,
    1.8657951723620643 + 1.077217345015942j,
)

# ancilla displacements realizing the pure-imaginary root at exact outcome 0;
# closed forms (1 - 10**-1/2) 10**1/3, -0.4 * 10**1/3, and -10**-1/6
P0_ROOT1_5DB = 1.4731426209739225
Q0_ROOT1_COUNTING_K08 = -0.8617738760127536
Q0_ROOT1_COUNTING_5DB = -0.6812920690579612


def test_cubic_gate_phase_values(gate):
    q = np.linspace(-3.0, 3.0, 7)
    assert np.allclose(gate.phase(q), np.exp(1j * 0.1 * q**3), atol=1e-14)
    assert gate.degree == 3


def test_factorization_roots_frozen(plan):
    assert plan.order_n == 1 and plan.degree_l == 3
    assert plan.leading_coeff == pytest.approx(0.1j, abs=1e-12)
    for found, expected in zip(plan.roots, FROZEN_ROOTS):
        assert found == pytest.approx(expected, abs=1e-9)
        assert abs(found) == pytest.approx(ROOT_RADIUS, abs=1e-9)


def test_factored_polynomial_matches_taylor(plan):
    q = np.linspace(-5.0, 5.0, 41)
    assert np.allclose(plan.polynomial_values(q), 1.0 + 0.1j * q**3, atol=1e-10)


def test_second_order_factorization(gate):
    plan2 = taylor_factorize(gate, 2)
    assert plan2.degree_l == 6 and len(plan2.roots) == 6
    q = np.linspace(-4.0, 4.0, 33)
    x = 1j * 0.1 * q**3
    assert np.allclose(plan2.polynomial_values(q), 1.0 + x + x**2 / 2.0, atol=1e-9)


def test_taylor_order_improves_small_strength():
    """Higher truncation order converges on the weak gate, Fock-2 input."""
    gate = cubic_gate(0.01)
    wf = fock_state(2)
    expected = (0.999985600728, 0.999999832208, 0.999999997939)
    fids = tuple(
        bare_polynomial_fidelity(gate, taylor_factorize(gate, order), wf)
        for order in (1, 2, 3)
    )
    assert fids[0] < fids[1] < fids[2]
    for found, frozen in zip(fids, expected):
        assert found == pytest.approx(frozen, abs=1e-9)


def test_factorize_order_guards(gate):
    with pytest.raises(ValueError):
        taylor_factorize(gate, 0)
    with pytest.raises(ValueError):
        taylor_factorize(gate, 50)


def test_subtraction_solver_frozen_displacement(plan):
    anc = solve_ancilla_subtraction(plan.roots[0], db_to_width(5.0, SqueezeAxis.MOMENTUM), 0.0)
    assert anc.q_center == pytest.approx(0.0, abs=1e-12)
    assert anc.p_center == pytest.approx(P0_ROOT1_5DB, abs=1e-12)


@pytest.mark.parametrize("outcome", [0.0, -0.8, 1.7])
def test_subtraction_solver_roundtrip(plan, outcome):
    width = db_to_width(5.0, SqueezeAxis.MOMENTUM)
    for root in plan.roots:
        anc = solve_ancilla_subtraction(root, width, outcome)
        assert subtraction_block(anc, outcome).root == pytest.approx(root, abs=1e-12)


def test_subtraction_root_shifts_against_outcome(plan):
    """Moving the read-out by +eps moves the realized root by -eps."""
    width = db_to_width(5.0, SqueezeAxis.MOMENTUM)
    anc = solve_ancilla_subtraction(plan.roots[1], width, 0.0)
    eps = 0.37
    base = subtraction_block(anc, 0.0).root
    assert subtraction_block(anc, eps).root == pytest.approx(base - eps, abs=1e-12)


def test_counting_solver_frozen_displacements(plan):
    anc = solve_ancilla_counting(plan.roots[0], math.sqrt(0.8))
    assert anc.q_center == pytest.approx(Q0_ROOT1_COUNTING_K08, abs=1e-10)
    assert anc.p_center == pytest.approx(0.0, abs=1e-12)
    anc5 = solve_ancilla_counting(plan.roots[0], db_to_width(5.0, SqueezeAxis.POSITION))
    assert anc5.q_center == pytest.approx(Q0_ROOT1_COUNTING_5DB, abs=1e-10)


@pytest.mark.parametrize("root", [0.4 - 0.3j, 2.1j, -1.2 + 0.9j])
def test_counting_solver_roundtrip(root):
    anc = solve_ancilla_counting(root, 0.9)
    assert counting_block(anc).root == pytest.approx(root, abs=1e-12)


def test_vacuum_width_is_singular_for_subtraction():
    # w**2 = 2 zeroes the root denominator; 0 dB has no realizable root
    with pytest.raises(SingularAncilla):
        solve_ancilla_subtraction(1.0 + 1.0j, db_to_width(0.0, SqueezeAxis.MOMENTUM), 0.0)
    with pytest.raises(SingularAncilla):
        subtraction_block(SqueezedParams(0.3, math.sqrt(2.0)), 0.0)


def test_monomial_norm_on_vacuum(plan):
    # <0|(q - conj(root))(q - root)|0> = 1/2 + |root|^2 for centered roots
    root = plan.roots[0]
    out = apply_diagonal(fock_state(0), lambda q: q - root)
    assert out.norm_sq() == pytest.approx(0.5 + abs(root) ** 2, abs=1e-9)
    assert out.norm_sq() == pytest.approx(5.141588833612779, abs=1e-9)


def test_blocks_commute(plan, protocol_input):
    """Diagonal blocks in any order produce the same chain output."""
    width = db_to_width(5.0, SqueezeAxis.MOMENTUM)
    blocks = [
        subtraction_block(solve_ancilla_subtraction(root, width, 0.0), 0.0)
        for root in plan.roots
    ]
    forward = protocol_input
    for block in blocks:
        forward, _ = apply_effective_block(forward, block)
    backward = protocol_input
    for block in reversed(blocks):
        backward, _ = apply_effective_block(backward, block)
    assert abs(inner(forward, backward)) == pytest.approx(1.0, abs=1e-12)


def test_apply_diagonal_unitary_preserves_norm(gate):
    wf = fock_state(2)
    assert apply_diagonal(wf, gate).norm_sq() == pytest.approx(1.0, abs=1e-12)
