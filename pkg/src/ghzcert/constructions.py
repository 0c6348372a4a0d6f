"""Concurrent-operator families that certify GHZ contradictions.

Three constructions jointly cover every particle number N >= 3 in every
dimension d >= 2.  Each one produces a list of product observables, all
sharing the unrotated GHZ state as an eigenstate, whose exact eigenphases
induce a congruence system over Z_d with no solution:

* method 1 - pick a factor f of d, rotate f consecutive qudits through
  1/(f*d) of a turn and take the N cyclic placements of that block.
  Works for every N > f that is not a multiple of f; N+1 operators and
  two measurement bases per qudit.
* method 2 - pair one rotated factor at +1/(N*d) with a conjugate factor
  at -1/(N*d) so each operator sits at net angle zero; the value
  equations force a single uniform variation delta, and the fully
  rotated product demands N*delta = 1 (mod d), impossible whenever
  gcd(N, d) > 1.  N+3 operators, three bases on two qudits.
* method 3 - for the remaining cells (gcd(N, d) = 1, N < d) extend
  method 2 at the finer angle 1/d**2 with a ladder of scaled factors
  whose multipliers grow Fibonacci-fashion until they bridge the gap to
  a net angle of 1/d.  At least N+4 operators.

A certificate bundles exact quantum checks (every claimed eigenphase
recomputed), the unsolvability verdict, numeric and exhaustive oracle
cross-checks, a dimension-witness check (no two measurement bases on one
qudit share orthogonal eigenstates) and a per-qudit irreducibility probe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .hidden_variables import (
    DEFAULT_BRUTE_CAP,
    brute_force_solve,
    HVVerdict,
    satisfiable,
    solve,
    system_from_operators,
)
from .operators import DEFAULT_DENSE_CAP, ProductOperator
from .phases import RationalPhase, ZERO_PHASE
from .states import dense_state, eigenvalue_exponent, make_ghz

__all__ = [
    "Certificate",
    "CertificationError",
    "Construction",
    "NoContradiction",
    "RegimeCell",
    "check_genuine_dimension",
    "check_irreducible",
    "classify",
    "classify_plane",
    "method1",
    "method1_operator_set",
    "method2",
    "method2_operator_set",
    "method3",
    "verify_construction",
    "witness_construction",
]

OperatorItem = tuple[ProductOperator, RationalPhase]


class CertificationError(RuntimeError):
    """A construction that should certify a contradiction failed to."""


@dataclass(frozen=True)
class NoContradiction:
    """Typed negative result: no contradiction at (d, N) for this method."""

    d: int
    n: int
    method: int
    reason: str

    def to_json_dict(self) -> dict:
        return {
            "status": "no-contradiction",
            "d": self.d,
            "n": self.n,
            "method": self.method,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class Construction:
    """A concurrent-operator set plus the distinguished conflicting operator.

    ``operators`` are the supporting observables; ``target`` is the one
    whose hidden-variable prediction conflicts with its quantum eigenphase.
    The full concurrent family is ``all_items()`` (operators + target).
    """

    d: int
    n: int
    method: int
    phi_o: RationalPhase
    operators: tuple[OperatorItem, ...]
    target: OperatorItem
    f: Optional[int] = None
    chain: Optional[tuple[int, ...]] = None

    def all_items(self) -> list[OperatorItem]:
        return list(self.operators) + [self.target]

    def operator_count(self) -> int:
        return len(self.operators) + 1

    def per_qudit_angles(self) -> list[set[RationalPhase]]:
        """Distinct factor angles used on each qudit (= measurement bases)."""
        used: list[set[RationalPhase]] = [set() for _ in range(self.n)]
        for op, _ in self.all_items():
            for k, a in enumerate(op.angles):
                used[k].add(a)
        return used

    def to_json_dict(self) -> dict:
        def item(entry: OperatorItem) -> dict:
            op, exponent = entry
            return {"angles": [str(a) for a in op.angles], "exponent": str(exponent)}

        meta: dict = {}
        if self.f is not None:
            meta["f"] = self.f
        if self.chain is not None:
            meta["chain"] = list(self.chain)
        return {
            "d": self.d,
            "n": self.n,
            "method": self.method,
            "phi_o": str(self.phi_o),
            "operators": [item(entry) for entry in self.operators],
            "target": item(self.target),
            "meta": meta,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Construction":
        d = int(data["d"])

        def item(entry: dict) -> OperatorItem:
            op = ProductOperator(
                d, tuple(RationalPhase.parse(a) for a in entry["angles"])
            )
            return op, RationalPhase.parse(entry["exponent"])

        meta = data.get("meta", {})
        chain = meta.get("chain")
        return cls(
            d=d,
            n=int(data["n"]),
            method=int(data["method"]),
            phi_o=RationalPhase.parse(data["phi_o"]),
            operators=tuple(item(entry) for entry in data["operators"]),
            target=item(data["target"]),
            f=meta.get("f"),
            chain=tuple(chain) if chain is not None else None,
        )


def _all_shift(d: int, n: int) -> ProductOperator:
    return ProductOperator(d, (ZERO_PHASE,) * n)


def _with_angles(d: int, n: int, placed: dict[int, RationalPhase]) -> ProductOperator:
    angles = [ZERO_PHASE] * n
    for pos, a in placed.items():
        angles[pos] = a
    return ProductOperator(d, tuple(angles))


def _divisors(d: int) -> list[int]:
    return [f for f in range(2, d + 1) if d % f == 0]


# ---------------------------------------------------------------------------
# method 1: cyclic blocks of f rotated factors
# ---------------------------------------------------------------------------


def method1_operator_set(
    d: int, n: int, f: int
) -> tuple[list[OperatorItem], OperatorItem]:
    """The method-1 family regardless of solvability: X^N at eigenphase 0
    plus the N cyclic placements of f consecutive factors rotated through
    1/(f*d), each at eigenphase 1/d.  Returned as (supporting, target)
    with the last cyclic placement distinguished as the target.
    """
    _validate_method1(d, n, f)
    phi_o = RationalPhase(1, f * d)
    nu = RationalPhase(1, d)
    blocks = []
    for start in range(n):
        placed = {(start + t) % n: phi_o for t in range(f)}
        blocks.append((_with_angles(d, n, placed), nu))
    supporting = [(_all_shift(d, n), ZERO_PHASE)] + blocks[:-1]
    return supporting, blocks[-1]


def _validate_method1(d: int, n: int, f: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if n < 3:
        raise ValueError("GHZ contradictions need at least three qudits")
    if f <= 1 or d % f != 0:
        raise ValueError(f"f = {f} is not a factor of d = {d} greater than 1")
    if n <= f:
        raise ValueError(f"need more qudits than the block length (N > f = {f})")


def method1(d: int, n: int, f: Optional[int] = None) -> Construction | NoContradiction:
    """Block-rotation contradiction, or NoContradiction when N is a
    multiple of f.  With f omitted, factors of d are tried in increasing
    order and the first that works is used.
    """
    if f is None:
        if d < 2:
            raise ValueError(f"dimension must be at least 2, got {d}")
        if n < 3:
            raise ValueError("GHZ contradictions need at least three qudits")
        for cand in _divisors(d):
            if cand < n and n % cand:
                f = cand
                break
        else:
            return NoContradiction(
                d,
                n,
                1,
                "every factor of d below N divides N, so the summed value "
                "equations are solvable",
            )
    else:
        _validate_method1(d, n, f)
        if n % f == 0:
            return NoContradiction(
                d,
                n,
                1,
                f"N = {n} is a multiple of f = {f}: f*sum(Y-exponents) = N "
                f"(mod {d}) has solutions",
            )
    supporting, target = method1_operator_set(d, n, f)
    return Construction(
        d=d,
        n=n,
        method=1,
        phi_o=RationalPhase(1, f * d),
        operators=tuple(supporting),
        target=target,
        f=f,
    )


# ---------------------------------------------------------------------------
# method 2: conjugate pairs forcing one uniform variation
# ---------------------------------------------------------------------------


def _conjugate_pair_items(d: int, n: int, phi_o: RationalPhase) -> list[OperatorItem]:
    """X^N plus the N+1 net-angle-zero operators pairing a factor at +phi_o
    with one at -phi_o.  Their value equations force every per-qudit
    variation to a common delta (and the conjugate variation to -delta):
    the first N-1 operators chain qudits 1..N-1 to qudit N, and the last
    two close the loop through qudit N-1.
    """
    y = phi_o
    yt = -phi_o
    items: list[OperatorItem] = [(_all_shift(d, n), ZERO_PHASE)]
    for k in range(n - 1):  # rotated factor on qudit k+1, conjugate on qudit N
        items.append((_with_angles(d, n, {k: y, n - 1: yt}), ZERO_PHASE))
    items.append((_with_angles(d, n, {n - 2: yt, n - 1: y}), ZERO_PHASE))
    items.append((_with_angles(d, n, {0: y, n - 2: yt}), ZERO_PHASE))
    return items


def method2_operator_set(d: int, n: int) -> tuple[list[OperatorItem], OperatorItem]:
    """The method-2 family regardless of solvability: the conjugate-pair
    set at phi_o = 1/(N*d) plus the fully rotated product at eigenphase
    1/d as the target.
    """
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if n < 3:
        raise ValueError(
            "need at least three qudits (two admit a hidden-variable model, "
            "and the conjugate pairing needs a third position)"
        )
    phi_o = RationalPhase(1, n * d)
    supporting = _conjugate_pair_items(d, n, phi_o)
    target = (ProductOperator(d, (phi_o,) * n), RationalPhase(1, d))
    return supporting, target


def method2(d: int, n: int) -> Construction | NoContradiction:
    """Conjugate-pair contradiction for gcd(N, d) > 1, else NoContradiction.

    The supporting set forces a single uniform variation delta, and the
    target demands N*delta = 1 (mod d); that has a solution exactly when
    N is invertible mod d.
    """
    supporting, target = method2_operator_set(d, n)
    if math.gcd(n, d) == 1:
        return NoContradiction(
            d,
            n,
            2,
            f"gcd(N, d) = 1: N*delta = 1 (mod {d}) is solvable, e.g. "
            f"delta = {pow(n, -1, d)}",
        )
    return Construction(
        d=d,
        n=n,
        method=2,
        phi_o=RationalPhase(1, n * d),
        operators=tuple(supporting),
        target=target,
    )


# ---------------------------------------------------------------------------
# method 3: multiplier ladder at phi_o = 1/d**2
# ---------------------------------------------------------------------------

ChainOp = tuple[dict[int, int], int]  # ({active position: multiplier}, new value)


def _fibonacci_index(m: int) -> Optional[int]:
    a, b = 1, 1  # values at levels 0 and 1 are 1 and 2
    level = 0
    while True:
        a, b = b, a + b
        level += 1
        if b == m:
            return level
        if b > m:
            return None


def _ladder_chain(m: int) -> tuple[list[ChainOp], int]:
    """Fibonacci ladder reaching multiplier m (m must be a Fibonacci number).

    Level j holds value F_j (F_1 = 2, F_2 = 3, F_3 = 5, ...) on active
    position (j-1) mod 3; the seeds F_0 = F_{-1} = 1 sit on positions 2
    and 1, where conjugate factors are available.  Getting sign s at
    level j requires sign -s at levels j-1 and j-2, so both signs of the
    intermediate values are emitted exactly when needed.
    """
    top = _fibonacci_index(m)
    if top is None:
        raise ValueError(f"{m} is not on the multiplier ladder")
    value = {-1: 1, 0: 1}
    prev, cur = 1, 2
    for j in range(1, top + 1):
        value[j] = cur
        prev, cur = cur, prev + cur

    def pos(j: int) -> int:
        return (j - 1) % 3

    ops: list[ChainOp] = []
    have: set[tuple[int, int]] = set()

    def need(j: int, sign: int) -> None:
        if j <= 0 or (j, sign) in have:
            return
        need(j - 1, -sign)
        need(j - 2, -sign)
        ops.append(
            (
                {
                    pos(j): sign * value[j],
                    pos(j - 1): -sign * value[j - 1],
                    pos(j - 2): -sign * value[j - 2],
                },
                sign * value[j],
            )
        )
        have.add((j, sign))

    need(top, +1)
    return ops, pos(top)


def _staircase_chain(m: int) -> tuple[list[ChainOp], int]:
    """Unit-step fallback chain reaching any multiplier m >= 2.

    Values alternate between active positions 0 and 1, each step adding a
    unit factor on position 2; the parity of m decides which variant ends
    on a positive value.  Always valid, at most m-1 operators, and its
    per-position multipliers span less than d, so it never collapses two
    measurement bases.
    """
    ops: list[ChainOp] = []
    if m % 2 == 0:  # +even on position 0, -odd on position 1
        for k in range(2, m + 1):
            if k % 2 == 0:
                ops.append(({0: k, 1: -(k - 1), 2: -1}, k))
            else:
                ops.append(({0: k - 1, 1: -k, 2: 1}, -k))
        return ops, 0
    for k in range(2, m + 1):  # -even on position 0, +odd on position 1
        if k % 2 == 0:
            ops.append(({0: -k, 1: k - 1, 2: 1}, -k))
        else:
            ops.append(({0: -(k - 1), 1: k, 2: -1}, k))
    return ops, 1


def method3(d: int, n: int) -> Construction:
    """Multiplier-ladder contradiction for 3 <= N < d.

    The conjugate-pair set at phi_o = 1/d**2 forces one uniform variation
    delta; the chain operators (net angle zero, padded with plain shifts
    beyond the three active qudits) extend that linearly to scaled
    factors, forcing the variation of X(m*phi_o) to m*delta.  The target
    places multiplier m = d-N+1 on the qudit where the chain lands and 1
    elsewhere: its net angle is d*phi_o = 1/d, so quantum mechanics
    assigns eigenvalue omega, while the forced variations predict
    omega^(d*delta) = 1.
    """
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if not 3 <= n < d:
        raise ValueError(f"the ladder construction needs 3 <= N < d, got N={n}, d={d}")
    m = d - n + 1
    phi_o = RationalPhase(1, d * d)
    actives = (0, n - 2, n - 1)

    def realize(chain: list[ChainOp], landing: int) -> Construction:
        supporting = _conjugate_pair_items(d, n, phi_o)
        for placed, _ in chain:
            angles = {actives[pos]: phi_o * mult for pos, mult in placed.items()}
            supporting.append((_with_angles(d, n, angles), ZERO_PHASE))
        target_angles = [phi_o] * n
        target_angles[actives[landing]] = phi_o * m
        target = (ProductOperator(d, tuple(target_angles)), RationalPhase(1, d))
        return Construction(
            d=d,
            n=n,
            method=3,
            phi_o=phi_o,
            operators=tuple(supporting),
            target=target,
            chain=tuple(new for _, new in chain),
        )

    if _fibonacci_index(m) is not None:
        construction = realize(*_ladder_chain(m))
        if _genuinely_d_dimensional(construction):
            return construction
        # Large ladders can fold two bases on one qudit together; the
        # staircase's tighter multiplier range never does.
    return realize(*_staircase_chain(m))


# ---------------------------------------------------------------------------
# regime classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegimeCell:
    """Regime of one (d, N) cell and the method witnessing its contradiction."""

    d: int
    n: int
    regime: int
    witness_method: int
    witness_f: Optional[int] = None

    def to_json_dict(self) -> dict:
        payload = {
            "d": self.d,
            "n": self.n,
            "regime": self.regime,
            "witness_method": self.witness_method,
        }
        if self.witness_f is not None:
            payload["witness_f"] = self.witness_f
        return payload


def classify(d: int, n: int) -> RegimeCell:
    """Assign (d, N) to its regime.

    Regime 1: some factor f of d has 1 < f < N with N not a multiple of f
    (the smallest such f is recorded).  Regime 2: otherwise, when
    gcd(N, d) > 1.  Regime 3: the rest, which always satisfies N < d.
    """
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    if n < 3:
        raise ValueError("GHZ contradictions need at least three qudits")
    for f in _divisors(d):
        if f < n and n % f:
            return RegimeCell(d, n, 1, 1, f)
    if math.gcd(n, d) > 1:
        return RegimeCell(d, n, 2, 2)
    return RegimeCell(d, n, 3, 3)


def witness_construction(cell: RegimeCell) -> Construction:
    """Build the construction certifying the cell's contradiction."""
    if cell.regime == 1:
        result = method1(cell.d, cell.n, cell.witness_f)
    elif cell.regime == 2:
        result = method2(cell.d, cell.n)
    else:
        result = method3(cell.d, cell.n)
    if isinstance(result, NoContradiction):  # pragma: no cover - classifier bug
        raise CertificationError(
            f"classification promised a contradiction at (d={cell.d}, N={cell.n}) "
            f"but method {cell.witness_method} declined: {result.reason}"
        )
    return result


def classify_plane(d_max: int, n_max: int, verify: bool = False) -> list[RegimeCell]:
    """Classify every cell with 2 <= d <= d_max, 3 <= N <= n_max.

    With verify=True each cell's witness construction is built and
    certified (exact quantum checks + UNSAT verdict); any failure raises
    CertificationError.
    """
    if d_max < 2:
        raise ValueError("d-max must be at least 2")
    if n_max < 3:
        raise ValueError("n-max must be at least 3")
    cells = [
        classify(d, n) for d in range(2, d_max + 1) for n in range(3, n_max + 1)
    ]
    if verify:
        for cell in cells:
            cert = verify_construction(witness_construction(cell), oracle=False)
            if not cert.certified:
                raise CertificationError(
                    f"cell (d={cell.d}, N={cell.n}) failed certification: "
                    f"quantum_ok={cert.quantum_ok}, hv={cert.hv_verdict.status}"
                )
    return cells


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    construction: Construction
    quantum_ok: bool
    hv_verdict: HVVerdict
    oracle_checked: bool
    genuinely_d_dimensional: bool
    irreducible: tuple[bool, ...]

    @property
    def certified(self) -> bool:
        return self.quantum_ok and self.hv_verdict.status == "UNSAT"

    def to_json_dict(self) -> dict:
        payload = {
            "construction": self.construction.to_json_dict(),
            "quantum_ok": self.quantum_ok,
            "hv_status": self.hv_verdict.status,
        }
        if self.hv_verdict.witness is not None:
            payload["hv_witness"] = list(self.hv_verdict.witness)
        payload.update(
            {
                "oracle_checked": self.oracle_checked,
                "genuinely_d_dimensional": self.genuinely_d_dimensional,
                "irreducible": list(self.irreducible),
                "certified": self.certified,
            }
        )
        return payload


def check_genuine_dimension(d: int, angles: Iterable[RationalPhase]) -> bool:
    """True iff no two of the angles differ by a nonzero multiple of 1/d.

    Two rotated observables X(a), X(b) have eigenbases sitting at the
    circle points a + k/d and b + k/d; a pair of orthogonal eigenstates
    across the two bases exists exactly when a - b is a nonzero multiple
    of 1/d (then the bases coincide up to relabeling).  When no pair of
    used angles does, no factor pair can be simultaneously
    block-diagonalized and the contradiction needs all d dimensions.
    """
    angle_list = list(angles)
    for i, a in enumerate(angle_list):
        for b in angle_list[i + 1 :]:
            if a != b and (a - b).is_multiple_of_unit(d):
                return False
    return True


def _genuinely_d_dimensional(c: Construction) -> bool:
    # Per qudit: bases on different qudits are never measured against each
    # other, so only same-qudit angle pairs can spoil dimensionality.
    return all(check_genuine_dimension(c.d, used) for used in c.per_qudit_angles())


def check_irreducible(c: Construction) -> tuple[bool, ...]:
    """Per qudit: does deleting that qudit destroy the contradiction?

    Deleting factor k from every operator keeps only those reduced
    operators that remain exact eigenoperators of the (N-1)-qudit state;
    the flag is True (removal spoils the proof, as irreducibility
    demands) iff the reduced congruence system is satisfiable or empty.
    """
    if c.n < 2:
        raise ValueError("cannot reduce below one qudit")
    reduced_state = make_ghz(c.d, c.n - 1, 0)
    flags = []
    for k in range(c.n):
        reduced_items = []
        for op, _ in c.all_items():
            rop = ProductOperator(c.d, op.angles[:k] + op.angles[k + 1 :])
            lam = eigenvalue_exponent(reduced_state, rop)
            if lam is not None:
                reduced_items.append((rop, lam))
        if not reduced_items:
            flags.append(True)
            continue
        flags.append(satisfiable(system_from_operators(c.d, reduced_items)))
    return tuple(flags)


def _dense_recheck(
    c: Construction, dense_cap: int, tolerance: float = 1e-12, sample_cap: int = 64
) -> None:
    """Re-derive a sample of eigenphases from full tensor numerics.

    Applies each factor matrix to the complete d^N amplitude vector and
    compares against exp(2*pi*i*lambda) times the vector.  Raises on any
    disagreement with the exact subspace computation: that would mean the
    exact engine itself is broken, not merely the construction.
    """
    state = make_ghz(c.d, c.n, 0)
    vec = dense_state(state, cap=dense_cap)
    items = c.all_items()
    if len(items) > sample_cap:
        step = -(-len(items) // sample_cap)
        items = items[::step]
    for op, _ in items:
        lam = eigenvalue_exponent(state, op)
        if lam is None:
            continue
        image = op.apply_dense(vec)
        if np.max(np.abs(image - lam.to_complex() * vec)) > tolerance:
            raise CertificationError(
                "exact eigenphase disagrees with dense tensor numerics"
            )


def verify_construction(
    c: Construction,
    oracle: bool = True,
    brute_cap: int = DEFAULT_BRUTE_CAP,
    dense_cap: int = DEFAULT_DENSE_CAP,
) -> Certificate:
    """Certify a construction end to end.

    quantum_ok recomputes every claimed eigenphase exactly (no tolerance);
    the verdict solves the congruence system over all operators including
    the target; with oracle=True the eigenphases are re-checked against
    dense tensors (when d^N fits the cap) and the verdict against
    exhaustive enumeration (when d^#vars fits the brute cap).  Failures
    of the construction are recorded in the certificate; oracle
    disagreements with the exact engine raise instead.
    """
    state = make_ghz(c.d, c.n, 0)
    quantum_ok = all(
        eigenvalue_exponent(state, op) == claimed for op, claimed in c.all_items()
    )
    system = system_from_operators(c.d, c.all_items())
    verdict = solve(system)

    oracle_checked = False
    if oracle and c.d**c.n <= dense_cap:
        _dense_recheck(c, dense_cap)
        oracle_checked = True
    if oracle and c.d ** len(system.variables) <= brute_cap:
        brute = brute_force_solve(system, cap=brute_cap)
        if brute.status != verdict.status or brute.witness != verdict.witness:
            raise CertificationError(
                "echelon solver and exhaustive enumeration disagree"
            )

    return Certificate(
        construction=c,
        quantum_ok=quantum_ok,
        hv_verdict=verdict,
        oracle_checked=oracle_checked,
        genuinely_d_dimensional=_genuinely_d_dimensional(c),
        irreducible=check_irreducible(c),
    )
