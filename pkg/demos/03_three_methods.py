"""One certified contradiction from each construction family.

Each construction lists product observables together with their exact GHZ
eigenphases.  If every one-qudit factor had a definite value omega^x, the
eigenphases would give one linear congruence per observable; the
certificate is the proof that the resulting system over Z_d has no
solution, while quantum mechanics satisfies every line by construction.
"""

from ghzcert import (
    method1,
    method1_operator_set,
    method2,
    method3,
    solve,
    system_from_operators,
    verify_construction,
)


def show(construction, note):
    d, n = construction.d, construction.n
    print(f"--- method {construction.method}: d = {d}, N = {n} ({note}) ---")
    print(f"base angle phi_o = {construction.phi_o}; "
          f"{construction.operator_count()} concurrent operators:")
    for op, exponent in construction.all_items():
        angles = " ".join(f"{str(a):>5s}" for a in op.angles)
        tag = "  <- target" if (op, exponent) == construction.target else ""
        print(f"   [{angles}]  eigenphase {exponent}{tag}")
    certificate = verify_construction(construction)
    system = system_from_operators(d, construction.all_items())
    print(f"congruence system: {len(system.variables)} unknowns mod {d}, "
          f"{len(system.constraints)} equations")
    print(f"quantum checks exact: {certificate.quantum_ok}")
    print(f"hidden-variable system: {certificate.hv_verdict.status}")
    print(f"numeric oracle ran: {certificate.oracle_checked}")
    print(f"genuinely {d}-dimensional: {certificate.genuinely_d_dimensional}")
    print(f"irreducible per qudit: {certificate.irreducible}")
    print(f"certified contradiction: {certificate.certified}\n")
    assert certificate.certified


# Method 1: four qutrits, blocks of three rotated factors at 1/9 of a turn.
# The five eigenvalue equations sum to an impossible congruence mod 3.
show(method1(3, 4, 3), "block rotations")

# Method 2: N a multiple of d. The conjugate-pair operators force one
# uniform variation delta, and the fully rotated product needs
# N*delta = 1 (mod d) - impossible whenever gcd(N, d) > 1.
show(method2(3, 3), "conjugate pairs")

# Method 3: the stubborn cells with gcd(N, d) = 1 and N < d. A ladder of
# scaled factors at 1/d^2 of a turn stretches the forced linearity far
# enough to pin the target at net angle 1/d.
show(method3(5, 3), "multiplier ladder")

# The same machinery reports honest negatives: where the block pattern
# cannot work, its would-be system is satisfiable.
declined = method1(3, 6, 3)
print(f"method 1 at d = 3, N = 6 declines: {declined.reason}")
supporting, target = method1_operator_set(3, 6, 3)
verdict = solve(system_from_operators(3, supporting + [target]))
print(f"and indeed the system is {verdict.status}, e.g. witness {verdict.witness}")
