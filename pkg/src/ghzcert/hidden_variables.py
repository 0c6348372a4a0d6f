"""Hidden-variable value assignments as linear congruence systems over Z_d.

A local (or noncontextual) model gives every one-qudit observable X(phi)
a definite value omega^x with x in Z_d, independently of which product it
is measured in.  Each product observable with a known eigenphase nu/d then
imposes one linear congruence: the per-qudit exponents sum to nu mod d.
Whether such a system has a solution is a question of exact integer
linear algebra: A·x = b (mod d) is solvable iff the integer system
[A | d·I]·z = b is, and the latter is decided by reducing the stacked
matrix to column echelon form over Z with gcd steps.  d may be composite
(4, 6, 8, 9, 10, 12 all matter here), so Z_d is only a ring and field
Gaussian elimination is not available; the integer normal-form route is
exact for every modulus.

The same machinery answers "which linear functionals of the hidden
variables are forced?": a functional is constant across all solutions iff
it lies in the row space of A modulo d, which is one more solvability
check (of the transposed system).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .operators import CapExceededError, ProductOperator
from .phases import RationalPhase, ZERO_PHASE, as_turns
from .states import eigenvalue_exponent, make_ghz

__all__ = [
    "Constraint",
    "FactorLabel",
    "HVSystem",
    "HVVerdict",
    "ImpliedDifference",
    "InvarianceReport",
    "Relation",
    "brute_force_solve",
    "forced_value",
    "implied_differences",
    "invariance_demo",
    "satisfiable",
    "solve",
    "system_from_operators",
]

DEFAULT_BRUTE_CAP = 10**6


@dataclass(frozen=True)
class FactorLabel:
    """One hidden variable: the observable X(angle) measured on one qudit.

    Identity is exact structural equality of (qudit, angle); distinct
    rationals are distinct observables, while 1/9 and 2/18 normalize to
    the same label.
    """

    qudit: int  # 1-based position within the product
    angle: RationalPhase

    def to_json_dict(self) -> dict:
        return {"qudit": self.qudit, "angle": str(self.angle)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FactorLabel":
        return cls(int(data["qudit"]), RationalPhase.parse(data["angle"]))


@dataclass(frozen=True)
class Constraint:
    """sum(coeff * x[var]) = rhs (mod d), with sparse (index, coeff) pairs."""

    coeffs: tuple[tuple[int, int], ...]
    rhs: int


@dataclass(frozen=True)
class HVSystem:
    d: int
    variables: tuple[FactorLabel, ...]
    constraints: tuple[Constraint, ...]

    @cached_property
    def _index(self) -> dict[FactorLabel, int]:
        return {label: i for i, label in enumerate(self.variables)}

    def var_index(self, label: FactorLabel) -> Optional[int]:
        return self._index.get(label)

    def dense_rows(self) -> tuple[list[list[int]], list[int]]:
        n = len(self.variables)
        rows = []
        rhs = []
        for con in self.constraints:
            row = [0] * n
            for idx, coeff in con.coeffs:
                row[idx] = (row[idx] + coeff) % self.d
            rows.append(row)
            rhs.append(con.rhs % self.d)
        return rows, rhs

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "vars": [v.to_json_dict() for v in self.variables],
            "constraints": [
                {"coeffs": [[i, c] for i, c in con.coeffs], "rhs": con.rhs}
                for con in self.constraints
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "HVSystem":
        d = int(data["d"])
        if d < 2:
            raise ValueError("modulus must be at least 2")
        variables = tuple(FactorLabel.from_json_dict(v) for v in data["vars"])
        constraints = []
        for con in data["constraints"]:
            coeffs = []
            for idx, coeff in con["coeffs"]:
                if not 0 <= int(idx) < len(variables):
                    raise ValueError(f"variable index {idx} out of range")
                coeffs.append((int(idx), int(coeff)))
            constraints.append(Constraint(tuple(coeffs), int(con["rhs"])))
        return cls(d, variables, tuple(constraints))


@dataclass(frozen=True)
class HVVerdict:
    """SAT with a canonical witness, or UNSAT with none."""

    status: str  # "SAT" | "UNSAT"
    witness: Optional[tuple[int, ...]]

    @property
    def is_sat(self) -> bool:
        return self.status == "SAT"


def system_from_operators(
    d: int,
    items: Iterable[tuple[ProductOperator, RationalPhase]],
) -> HVSystem:
    """One congruence per (operator, eigenphase nu/d) pair.

    The constraint for an N-factor operator puts coefficient 1 on the N
    labels (qudit, angle) and d*eigenphase on the right-hand side.
    Variables are deduplicated by exact label identity and kept in first
    encounter order, so equal inputs build byte-identical systems.
    """
    if d < 2:
        raise ValueError("modulus must be at least 2")
    variables: dict[FactorLabel, int] = {}
    constraints = []
    width = None
    for op, exponent in items:
        if op.d != d:
            raise ValueError("operator dimension disagrees with the modulus")
        if width is None:
            width = op.n
        elif op.n != width:
            raise ValueError("operators act on differing qudit counts")
        scaled = exponent.as_fraction() * d
        if scaled.denominator != 1:
            raise ValueError(f"eigenphase {exponent} is not a d-th root of unity")
        coeffs = []
        for k, angle in enumerate(op.angles, start=1):
            label = FactorLabel(k, angle)
            idx = variables.setdefault(label, len(variables))
            coeffs.append((idx, 1))
        constraints.append(Constraint(tuple(coeffs), int(scaled) % d))
    return HVSystem(d, tuple(variables), tuple(constraints))


def _solvable(rows: Sequence[Sequence[int]], rhs: Sequence[int], d: int) -> bool:
    """Decide whether A·x = b (mod d) has a solution.

    Works over the integers on the stacked matrix [A | d·I]: column
    operations (gcd steps) are unimodular, so they preserve the column
    lattice, and b lies in that lattice iff forward substitution through
    the echelon form succeeds with exact divisibility.
    """
    m = len(rows)
    if m == 0:
        return True
    width = len(rows[0])
    cols = [[row[j] % d for row in rows] for j in range(width)]
    for i in range(m):
        unit = [0] * m
        unit[i] = d
        cols.append(unit)
    b = [v % d for v in rhs]

    pivots: list[int] = []  # row index of pivot column t
    p = 0
    for i in range(m):
        while True:
            nz = [j for j in range(p, len(cols)) if cols[j][i] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            base = cols[j0]
            head = base[i]
            for j in nz:
                if j == j0:
                    continue
                q = cols[j][i] // head
                if q:
                    col = cols[j]
                    for r in range(i, m):
                        col[r] -= q * base[r]
        nz = [j for j in range(p, len(cols)) if cols[j][i] != 0]
        if nz:
            cols[p], cols[nz[0]] = cols[nz[0]], cols[p]
            pivots.append(i)
            p += 1

    solved: list[int] = []
    t = 0
    for i in range(m):
        resid = b[i] - sum(cols[s][i] * solved[s] for s in range(t))
        if t < len(pivots) and pivots[t] == i:
            head = cols[t][i]
            if resid % head:
                return False
            solved.append(resid // head)
            t += 1
        elif resid != 0:
            return False
    return True


def satisfiable(system: HVSystem) -> bool:
    """Fast SAT/UNSAT decision without witness extraction."""
    rows, rhs = system.dense_rows()
    return _solvable(rows, rhs, system.d)


def _satisfies(system: HVSystem, witness: Sequence[int]) -> bool:
    for con in system.constraints:
        total = sum(coeff * witness[idx] for idx, coeff in con.coeffs)
        if total % system.d != con.rhs % system.d:
            return False
    return True


def solve(system: HVSystem) -> HVVerdict:
    """Decide the system; on SAT return the lexicographically least witness.

    The witness is pinned one variable at a time: the smallest value in
    Z_d that keeps the remaining system solvable is substituted and the
    leading column eliminated.  That makes verdicts and witnesses
    reproducible byte for byte.
    """
    d = system.d
    rows, rhs = system.dense_rows()
    if not _solvable(rows, rhs, d):
        return HVVerdict("UNSAT", None)
    witness: list[int] = []
    for _ in range(len(system.variables)):
        tails = [row[1:] for row in rows]
        for v in range(d):
            cand = [(rhs[i] - rows[i][0] * v) % d for i in range(len(rows))]
            if _solvable(tails, cand, d):
                witness.append(v)
                rows, rhs = tails, cand
                break
        else:  # pragma: no cover - contradicts the SAT decision above
            raise RuntimeError("satisfiable system lost its solution space")
    verdict = HVVerdict("SAT", tuple(witness))
    assert _satisfies(system, verdict.witness)
    return verdict


def brute_force_solve(system: HVSystem, cap: int = DEFAULT_BRUTE_CAP) -> HVVerdict:
    """Independent oracle: exhaust Z_d^n in lexicographic order.

    Shares no code with the echelon solver; agreement of the two is a
    standing cross-check.  Raises CapExceededError when d^n > cap.
    """
    d = system.d
    nv = len(system.variables)
    total = d**nv
    if total > cap:
        raise CapExceededError(f"{total} assignments exceed the cap {cap}")
    rows, rhs = system.dense_rows()
    if total <= 50_000:
        for assignment in itertools.product(range(d), repeat=nv):
            if all(
                sum(c * assignment[j] for j, c in enumerate(row)) % d == r
                for row, r in zip(rows, rhs)
            ):
                return HVVerdict("SAT", assignment)
        return HVVerdict("UNSAT", None)
    # Vectorized sweep: index digits in base d are the assignment, most
    # significant digit first, so index order is lexicographic order.
    idx = np.arange(total, dtype=np.int64)
    ok = np.ones(total, dtype=bool)
    for row, r in zip(rows, rhs):
        acc = np.zeros(total, dtype=np.int64)
        for k, c in enumerate(row):
            if c % d:
                acc += (c % d) * ((idx // d ** (nv - 1 - k)) % d)
        ok &= (acc % d) == (r % d)
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return HVVerdict("UNSAT", None)
    first = int(hits[0])
    witness = tuple(int(first // d ** (nv - 1 - k)) % d for k in range(nv))
    return HVVerdict("SAT", witness)


def _functional_vector(
    system: HVSystem, functional: Mapping[FactorLabel, int]
) -> Optional[list[int]]:
    """Restrict a label->coefficient functional to the system's variables.

    Returns None when the functional touches a variable the system never
    constrains (with a coefficient nonzero mod d): such a functional can
    take several values, so it is certainly not forced.
    """
    vec = [0] * len(system.variables)
    for label, coeff in functional.items():
        idx = system.var_index(label)
        if idx is None:
            if coeff % system.d:
                return None
        else:
            vec[idx] = (vec[idx] + coeff) % system.d
    return vec


def _in_row_space(system: HVSystem, vec: Sequence[int]) -> bool:
    # vec is orthogonal to the homogeneous solution lattice iff it is a
    # Z_d-combination of constraint rows, i.e. A^T·y = vec (mod d) solvable.
    rows, _ = system.dense_rows()
    transposed = [[row[j] for row in rows] for j in range(len(system.variables))]
    return _solvable(transposed, vec, system.d)


def forced_value(
    system: HVSystem,
    functional: Mapping[FactorLabel, int],
    _witness: Optional[Sequence[int]] = None,
) -> Optional[int]:
    """Value of sum(coeff * x[label]) mod d if equal across ALL solutions.

    Exact criterion: the functional is constant on the solution coset iff
    it lies in the row space of the constraint matrix modulo d; the value
    is then read off any one witness.  Returns None when not forced.
    Raises ValueError on an unsatisfiable system (nothing to compare).
    """
    vec = _functional_vector(system, functional)
    if vec is None:
        return None
    if _witness is None:
        verdict = solve(system)
        if not verdict.is_sat:
            raise ValueError("system is unsatisfiable; no solutions to compare")
        _witness = verdict.witness
    if not _in_row_space(system, vec):
        return None
    return sum(c * w for c, w in zip(vec, _witness)) % system.d


@dataclass(frozen=True)
class ImpliedDifference:
    pair: tuple[FactorLabel, FactorLabel]
    forced: Optional[int]


def implied_differences(
    system: HVSystem,
    pairs: Iterable[tuple[FactorLabel, FactorLabel]],
) -> list[ImpliedDifference]:
    """For each pair (u, v): the forced value of x_u - x_v, if constant."""
    verdict = solve(system)
    if not verdict.is_sat:
        raise ValueError("differences are vacuous: system is unsatisfiable")
    results = []
    for u, v in pairs:
        functional: dict[FactorLabel, int] = {u: 1}
        functional[v] = functional.get(v, 0) - 1
        results.append(
            ImpliedDifference(
                (u, v), forced_value(system, functional, _witness=verdict.witness)
            )
        )
    return results


@dataclass(frozen=True)
class Relation:
    """One linear relation the congruences force (or fail to force)."""

    description: str
    forced: Optional[int]
    expected: int = 0

    @property
    def holds(self) -> bool:
        return self.forced == self.expected


@dataclass(frozen=True)
class InvarianceReport:
    d: int
    n: int
    angle: RationalPhase
    system: HVSystem
    relations: tuple[Relation, ...]
    partition: Optional[tuple[int, int]]

    @property
    def all_forced(self) -> bool:
        return all(r.holds for r in self.relations)

    def to_json_dict(self) -> dict:
        payload = {
            "d": self.d,
            "n": self.n,
            "angle": str(self.angle),
            "relations": [
                {
                    "description": r.description,
                    "forced": r.forced,
                    "expected": r.expected,
                    "holds": r.holds,
                }
                for r in self.relations
            ],
            "all_forced": self.all_forced,
        }
        if self.partition is not None:
            payload["partition"] = list(self.partition)
        return payload


def _combine(*functionals: Mapping[FactorLabel, int]) -> dict[FactorLabel, int]:
    out: dict[FactorLabel, int] = {}
    for f in functionals:
        for label, coeff in f.items():
            out[label] = out.get(label, 0) + coeff
    return out


def _scaled(functional: Mapping[FactorLabel, int], k: int) -> dict[FactorLabel, int]:
    return {label: k * coeff for label, coeff in functional.items()}


def invariance_demo(
    d: int,
    n: int,
    angle: RationalPhase | Fraction | int,
    partition: Optional[tuple[int, int]] = None,
) -> InvarianceReport:
    """What hidden variables inherit from net-angle-preserving rotations.

    Rotating qudit i through +phi and qudit j through -phi keeps the net
    angle at zero, so the resulting product observable shares the GHZ
    state's unit eigenvalue with the plain all-shift product.  Equating
    hidden-variable values across all such pairs forces, at the sampled
    angle: antisymmetry dX_i(phi) + dX_j(-phi) = 0, uniformity of the
    variation across qudits, and oddness in phi (dX denotes the variation
    x(phi) - x(0)).  Given a partition (n1, n2) of the qudits, rotating
    the groups through phi and -phi*n1/n2 additionally forces the scaling
    relation n1*dX(phi) = n2*dX(phi*n1/n2).  A finite set of observables
    can only pin these relations at the sampled angles; nothing here
    claims the continuum statement for every phi.
    """
    if n < 3:
        raise ValueError("need at least three qudits")
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    phi = RationalPhase.from_fraction(as_turns(angle))

    def shifted_product(assignment: Mapping[int, RationalPhase]) -> ProductOperator:
        angles = [ZERO_PHASE] * n
        for pos, a in assignment.items():
            angles[pos] = a
        return ProductOperator(d, tuple(angles))

    items: list[tuple[ProductOperator, RationalPhase]] = [
        (shifted_product({}), ZERO_PHASE)
    ]
    for i in range(n):
        for j in range(n):
            if i != j:
                items.append((shifted_product({i: phi, j: -phi}), ZERO_PHASE))

    lam_phi: Optional[RationalPhase] = None
    if partition is not None:
        n1, n2 = partition
        if n1 < 1 or n2 <= n1 or n1 + n2 != n:
            raise ValueError("partition must split all qudits with n2 > n1 >= 1")
        lam_phi = RationalPhase.from_fraction(as_turns(angle) * Fraction(n1, n2))
        for i in range(n):
            for j in range(n):
                if i != j:
                    items.append(
                        (shifted_product({i: lam_phi, j: -lam_phi}), ZERO_PHASE)
                    )
        group = {i: phi for i in range(n1)}
        group.update({i: -lam_phi for i in range(n1, n)})
        items.append((shifted_product(group), ZERO_PHASE))

    state = make_ghz(d, n, 0)
    for op, claimed in items:
        assert eigenvalue_exponent(state, op) == claimed

    system = system_from_operators(d, items)
    verdict = solve(system)
    assert verdict.is_sat  # homogeneous system; all-zero always works
    witness = verdict.witness

    def variation(i: int, a: RationalPhase) -> dict[FactorLabel, int]:
        # dX_i(a) = x(i, a) - x(i, 0); collapses to the zero functional at a = 0
        return _combine({FactorLabel(i + 1, a): 1}, {FactorLabel(i + 1, ZERO_PHASE): -1})

    def probe(description: str, functional: Mapping[FactorLabel, int]) -> Relation:
        return Relation(
            description, forced_value(system, functional, _witness=witness)
        )

    relations = []
    for i in range(n):
        for j in range(n):
            if i != j:
                relations.append(
                    probe(
                        f"dX_{i + 1}({phi}) + dX_{j + 1}({-phi})",
                        _combine(variation(i, phi), variation(j, -phi)),
                    )
                )
    for i in range(1, n):
        relations.append(
            probe(
                f"dX_{i + 1}({phi}) - dX_1({phi})",
                _combine(variation(i, phi), _scaled(variation(0, phi), -1)),
            )
        )
    relations.append(
        probe(
            f"dX_1({phi}) + dX_1({-phi})",
            _combine(variation(0, phi), variation(0, -phi)),
        )
    )
    if partition is not None:
        n1, n2 = partition
        relations.append(
            probe(
                f"{n1}*dX_1({phi}) - {n2}*dX_1({lam_phi})",
                _combine(
                    _scaled(variation(0, phi), n1),
                    _scaled(variation(0, lam_phi), -n2),
                ),
            )
        )

    return InvarianceReport(d, n, phi, system, tuple(relations), partition)
