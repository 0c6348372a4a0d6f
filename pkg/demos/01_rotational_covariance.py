"""Rotational structure of GHZ states, walked through on the unit circle.

A GHZ state of N qudits only remembers the *sum* of the per-qudit
rotation angles.  Moving that sum around the circle, one meets d mutually
orthogonal states at multiples of 1/d of a turn; the rotated observables
X(phi) repeat with the same period, and at the special points nu/d every
operator with that collective angle shares the GHZ state as an eigenstate
with eigenvalue omega^nu.  Everything below is exact rational arithmetic;
the dense numerics at the end are only a cross-check.
"""

from fractions import Fraction

import numpy as np

from ghzcert import (
    ProductOperator,
    RationalPhase,
    ZERO_PHASE,
    apply_rotations,
    dense_state,
    eigenvalue_exponent,
    expectation,
    inner_product,
    make_ghz,
    make_rotated_x,
    make_x,
)

d, n = 3, 4
print(f"=== {n} qutrits (d = {d}) ===\n")

print("The state only sees the net angle:")
base = make_ghz(d, n, 0)
a = apply_rotations(base, [Fraction(1, 3), 0, 0, 0])
b = apply_rotations(base, [Fraction(1, 9)] * 3 + [0])
print(f"  rotating one qudit by 1/3 of a turn  -> state at {a.phi}")
print(f"  rotating three qudits by 1/9 each    -> state at {b.phi}")
print(f"  same state object? {a == b}\n")

print(f"The circle holds {d} orthogonal states, at turn fractions nu/{d}:")
family = [make_ghz(d, n, Fraction(nu, d)) for nu in range(d)]
for i, s in enumerate(family):
    row = [inner_product(s, t) for t in family]
    rendered = "  ".join(
        "1" if not r.is_zero and abs(r.numeric - 1) < 1e-12 else "0" for r in row
    )
    print(f"  <Psi({i}/{d})| : {rendered}")
print()

print("Between grid points the overlap is sin(pi*d*delta)/(d*sin(pi*delta)):")
half = inner_product(make_ghz(d, 2, 0), make_ghz(d, 2, Fraction(1, 2)))
print(f"  at delta = 1/2 turn (d = 3): exactly {half.numeric.real:+.6f} = -1/3\n")

print("Rotated observables X(phi) repeat with period 1/d (up to omega):")
phi = RationalPhase(1, 9)
x_phi = make_rotated_x(d, phi)
x_next = make_rotated_x(d, phi + RationalPhase(1, d))
print(f"  X({phi}) column phases:       {[str(p) for p in x_phi.phases]}")
print(f"  X({phi} + 1/{d}) column phases: {[str(p) for p in x_next.phases]}")
print(f"  difference is 1/{d} everywhere -> one global omega\n")

print("Concurrent operators: distribute the angle sum any way you like.")
for angles in [(1, 1, 1, 0), (3, 0, 0, 0), (2, 1, 0, 0), (5, 0, -1, -1)]:
    op = ProductOperator(d, tuple(RationalPhase(k, 9) for k in angles))
    lam = eigenvalue_exponent(base, op)
    pretty = ", ".join(str(RationalPhase(k, 9)) for k in angles)
    print(f"  angles ({pretty}) sum to {op.collective_angle} -> eigenphase {lam}")
print()

print("Expectation values do not depend on N (one-body reduction):")
for nn in (1, 3, 5):
    op = ProductOperator(d, (RationalPhase(1, 7),) + (ZERO_PHASE,) * (nn - 1))
    value = expectation(make_ghz(d, nn, 0), op).numeric
    print(f"  N = {nn}: <X(1/7) x shifts> = {value:+.12f}")
print()

print("Dense-tensor cross-check of one eigen relation (float, 1e-12):")
op = ProductOperator(d, (RationalPhase(1, 9),) * 3 + (ZERO_PHASE,))
lam = eigenvalue_exponent(base, op)
vec = dense_state(base)
err = np.max(np.abs(op.apply_dense(vec) - lam.to_complex() * vec))
print(f"  || op|Psi> - e^(2*pi*i*{lam}) |Psi> ||_max = {err:.2e}")
assert make_rotated_x(d, ZERO_PHASE) == make_x(d)
