"""How well does a first-order monomial product approximate the cubic gate?

Walks the measurement-free side of the toolkit: factor 1 + i nu q^3 into
monomials, compare it pointwise with exp(i nu q^3), and sweep the overlap
fidelity over Fock and coherent inputs for several gate strengths.
"""

import numpy as np

from cvpoly import (
    DEFAULT_GRID,
    InputFamily,
    bare_polynomial_fidelity,
    cubic_gate,
    input_state,
    taylor_factorize,
)

# --- the factorization itself ----------------------------------------------

nu = 0.1
gate = cubic_gate(nu)
plan = taylor_factorize(gate, 1)

print(f"strength nu = {nu}")
print(f"leading coefficient = {plan.leading_coeff:.3g}")
for k, root in enumerate(plan.roots):
    print(f"root {k}: {root.real:+.6f} {root.imag:+.6f}i  (|root| = {abs(root):.6f})")

# The roots sit on a circle of radius nu**(-1/3); pushing nu up pulls them
# toward the origin and shrinks the region where the polynomial tracks the
# unitary phase.
print(f"nu**(-1/3) = {nu ** (-1.0 / 3.0):.6f}")

# --- pointwise comparison ---------------------------------------------------

q = np.linspace(-3.0, 3.0, 13)
target = np.exp(1j * nu * q**3)
poly = plan.polynomial_values(q)
print("\n   q     |target - poly|")
for qi, t, p in zip(q, target, poly):
    print(f"{qi:+5.1f}    {abs(t - p):.3e}")

# --- fidelity sweeps --------------------------------------------------------

# Fock inputs probe successively wider position support, coherent inputs a
# displaced vacuum; x is the photon number for one family and |alpha|^2 for
# the other.
print("\nbare fidelity, Fock inputs (rows n, columns nu)")
strengths = (0.1, 0.2, 0.5)
header = "  n  " + "".join(f"  nu={s:<5g}" for s in strengths)
print(header)
for n in range(11):
    wf = input_state(InputFamily.FOCK, float(n), DEFAULT_GRID)
    fids = [
        bare_polynomial_fidelity(cubic_gate(s), taylor_factorize(cubic_gate(s), 1), wf)
        for s in strengths
    ]
    print(f" {n:2d}  " + "".join(f"  {f:8.4f}" for f in fids))

print("\nbare fidelity, coherent inputs (rows |alpha|^2)")
print(header.replace("n ", "x "))
for x in range(11):
    wf = input_state(InputFamily.COHERENT, float(x), DEFAULT_GRID)
    fids = [
        bare_polynomial_fidelity(cubic_gate(s), taylor_factorize(cubic_gate(s), 1), wf)
        for s in strengths
    ]
    print(f" {x:2d}  " + "".join(f"  {f:8.4f}" for f in fids))

# The Fock column is not monotone once the polynomial modulus dips through
# zero inside the state's support; the coherent column decays smoothly
# because displacement only moves the envelope.
