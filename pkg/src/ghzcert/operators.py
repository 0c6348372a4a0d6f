"""One-qudit monomial operators and N-qudit products of rotated shifts.

A monomial operator has exactly one unit-modulus entry in every row and
column, so it is fully determined by a cyclic shift and one phase per
basis column.  The clock operator Z, the shift operator X, axis rotations
R(phi) and the rotated observables X(phi) are all of this form, and their
products compose exactly in (shift, phases) coordinates.  Dense matrices
exist only as a bridge to numeric cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .phases import RationalPhase, ZERO_PHASE, as_turns

__all__ = [
    "CapExceededError",
    "DEFAULT_DENSE_CAP",
    "MonomialOp",
    "ProductOperator",
    "make_rotated_x",
    "make_rotation",
    "make_x",
    "make_z",
]

DEFAULT_DENSE_CAP = 4096


class CapExceededError(ValueError):
    """A dense or enumerative cross-check would exceed its configured cap."""


def _check_dim(d: int) -> None:
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")


@dataclass(frozen=True)
class MonomialOp:
    """d x d operator mapping |n> to exp(2*pi*i*phases[n]) |n+shift mod d>."""

    d: int
    shift: int
    phases: tuple[RationalPhase, ...]

    def __post_init__(self) -> None:
        _check_dim(self.d)
        if len(self.phases) != self.d:
            raise ValueError("need exactly one phase per basis column")
        object.__setattr__(self, "shift", self.shift % self.d)
        object.__setattr__(self, "phases", tuple(self.phases))

    @classmethod
    def identity(cls, d: int) -> "MonomialOp":
        return cls(d, 0, (ZERO_PHASE,) * d)

    def __matmul__(self, other: "MonomialOp") -> "MonomialOp":
        """Exact matrix product self @ other (self applied second)."""
        if not isinstance(other, MonomialOp):
            return NotImplemented
        if self.d != other.d:
            raise ValueError("dimension mismatch in composition")
        d = self.d
        phases = tuple(
            other.phases[n] + self.phases[(n + other.shift) % d] for n in range(d)
        )
        return MonomialOp(d, self.shift + other.shift, phases)

    def adjoint(self) -> "MonomialOp":
        d = self.d
        phases = tuple(-self.phases[(m - self.shift) % d] for m in range(d))
        return MonomialOp(d, -self.shift, phases)

    def rotated(self, phi: RationalPhase | Fraction | int) -> "MonomialOp":
        """Covariant rotation R(phi) @ self @ R(phi)^dagger."""
        r = make_rotation(self.d, phi)
        return r @ self @ r.adjoint()

    def to_dense(self) -> np.ndarray:
        mat = np.zeros((self.d, self.d), dtype=complex)
        for n in range(self.d):
            mat[(n + self.shift) % self.d, n] = self.phases[n].to_complex()
        return mat


def make_z(d: int) -> MonomialOp:
    """Clock operator: diagonal with entries omega^n, omega = exp(2*pi*i/d)."""
    _check_dim(d)
    return MonomialOp(d, 0, tuple(RationalPhase(n, d) for n in range(d)))


def make_x(d: int) -> MonomialOp:
    """Cyclic raising operator |n> -> |n+1>, with |d> identified with |0>."""
    _check_dim(d)
    return MonomialOp(d, 1, (ZERO_PHASE,) * d)


def make_rotated_x(d: int, phi: RationalPhase | Fraction | int) -> MonomialOp:
    """The rotated observable X(phi) = R(phi) X R(phi)^dagger in closed form.

    Every column carries phase phi except the wrap-around column, which
    carries (1-d)*phi.  Advancing phi by 1/d therefore multiplies the
    whole operator by omega, so X(phi) spans one period per 1/d turn.
    """
    _check_dim(d)
    angle = RationalPhase.from_fraction(as_turns(phi))
    return MonomialOp(d, 1, (angle,) * (d - 1) + (angle * (1 - d),))


def make_rotation(d: int, phi: RationalPhase | Fraction | int) -> MonomialOp:
    """Axis rotation exp(-i*S_z*phi) as a diagonal monomial operator.

    ``phi`` is a turn fraction; signed/whole-turn rationals are accepted so
    that a full turn stays distinguishable from no rotation, which matters
    for half-integer spin (even d), where a 2*pi rotation equals -1.
    """
    _check_dim(d)
    turns = as_turns(phi)
    spin = Fraction(d - 1, 2)
    phases = tuple(
        RationalPhase.from_fraction((n - spin) * turns) for n in range(d)
    )
    return MonomialOp(d, 0, phases)


@dataclass(frozen=True)
class ProductOperator:
    """Tensor product of rotated shift observables, one factor per qudit.

    Only the defining angles are stored; the collective angle and any
    matrix form are derived on demand.  Constructions reason about angles
    (periods, circle points), never about matrices.
    """

    d: int
    angles: tuple[RationalPhase, ...]

    def __post_init__(self) -> None:
        _check_dim(self.d)
        if len(self.angles) < 1:
            raise ValueError("need at least one factor")
        object.__setattr__(self, "angles", tuple(self.angles))

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def collective_angle(self) -> RationalPhase:
        total = ZERO_PHASE
        for a in self.angles:
            total = total + a
        return total

    def factor(self, k: int) -> MonomialOp:
        return make_rotated_x(self.d, self.angles[k])

    def dense(self, cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        """Full d^N x d^N matrix (numeric oracle); refuses above the cap."""
        size = self.d**self.n
        if size > cap:
            raise CapExceededError(
                f"dense matrix would be {size} x {size}, cap is {cap}"
            )
        return reduce(np.kron, (self.factor(k).to_dense() for k in range(self.n)))

    def apply_dense(self, vec: np.ndarray) -> np.ndarray:
        """Apply the operator to a full d^N vector, factor by factor.

        Equivalent to ``self.dense() @ vec`` but without materializing the
        matrix, so the numeric oracle stays cheap at the cap boundary.
        """
        d, n = self.d, self.n
        tensor = np.asarray(vec, dtype=complex).reshape((d,) * n)
        for k in range(n):
            tensor = np.tensordot(self.factor(k).to_dense(), tensor, axes=([1], [k]))
            tensor = np.moveaxis(tensor, 0, k)
        return tensor.reshape(-1)

    def to_json_dict(self) -> dict:
        return {"d": self.d, "angles": [str(a) for a in self.angles]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ProductOperator":
        return cls(
            int(data["d"]),
            tuple(RationalPhase.parse(a) for a in data["angles"]),
        )
