"""Exact arithmetic on angles stored as rational fractions of a full turn.

Every amplitude and eigenvalue in this package is a root of unity, so
angles are kept as exact elements of Q/Z (turn fractions) and never as
floats.  A phase ``p`` stands for the complex unit ``exp(2*pi*i*p)``;
floats appear only in :meth:`RationalPhase.to_complex`, the bridge to the
numeric cross-checks.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["PhaseParseError", "RationalPhase", "ZERO_PHASE", "as_turns"]

_CANONICAL_RE = re.compile(r"^(\d+)/(\d+)$")


class PhaseParseError(ValueError):
    """Input string is not a canonical ``num/den`` turn fraction."""


@dataclass(frozen=True)
class RationalPhase:
    """An angle on the unit circle as a reduced fraction of a turn.

    Instances are normalized on construction: ``0 <= num < den`` and
    ``gcd(num, den) == 1``.  Equality and hashing are structural on the
    normalized pair, so equal angles are always equal values.  Arbitrary
    precision integers keep chained scaling exact (denominators like d**2
    appear routinely).
    """

    num: int = 0
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ValueError("denominator must be nonzero")
        reduced = Fraction(self.num, self.den) % 1
        object.__setattr__(self, "num", reduced.numerator)
        object.__setattr__(self, "den", reduced.denominator)

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "RationalPhase":
        """Wrap an exact rational number of turns, reducing mod 1."""
        f = Fraction(value)
        return cls(f.numerator, f.denominator)

    @classmethod
    def parse(cls, text: str) -> "RationalPhase":
        """Parse the canonical serialization ``"num/den"``.

        Only fully reduced, in-range strings are accepted ("2/18", "5/3"
        and "-1/3" are all rejected), so parsing is the exact inverse of
        ``str``.
        """
        m = _CANONICAL_RE.match(text)
        if not m:
            raise PhaseParseError(f"not a 'num/den' turn fraction: {text!r}")
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0 or num >= den or math.gcd(num, den) != 1:
            raise PhaseParseError(f"not in canonical form: {text!r}")
        return cls(num, den)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __add__(self, other: "RationalPhase | Fraction | int") -> "RationalPhase":
        return RationalPhase.from_fraction(self.as_fraction() + as_turns(other))

    __radd__ = __add__

    def __sub__(self, other: "RationalPhase | Fraction | int") -> "RationalPhase":
        return RationalPhase.from_fraction(self.as_fraction() - as_turns(other))

    def __rsub__(self, other: "RationalPhase | Fraction | int") -> "RationalPhase":
        return RationalPhase.from_fraction(as_turns(other) - self.as_fraction())

    def __neg__(self) -> "RationalPhase":
        return RationalPhase(-self.num, self.den)

    def __mul__(self, k: int) -> "RationalPhase":
        """The k-fold angle; negative k gives the inverse rotation."""
        if not isinstance(k, int):
            return NotImplemented
        return RationalPhase(self.num * k, self.den)

    __rmul__ = __mul__

    def is_multiple_of_unit(self, d: int) -> bool:
        """True iff the angle is an integer multiple of 1/d of a turn.

        This is the exact orthogonality test for the rotated-state family:
        no cyclotomic zero-testing is ever needed beyond it.
        """
        if d < 2:
            raise ValueError("d must be at least 2")
        return (self.as_fraction() * d).denominator == 1

    def to_complex(self) -> complex:
        """Machine-precision exp(2*pi*i*num/den); for oracle comparisons only."""
        return cmath.exp(2j * math.pi * (self.num / self.den))

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def as_turns(value: "RationalPhase | Fraction | int") -> Fraction:
    """Coerce an angle-like value to an exact (signed) number of turns.

    RationalPhase inputs contribute their canonical value in [0, 1);
    plain rationals are taken as-is, so callers can express signed
    rotations (e.g. ``Fraction(-1, 9)``) and whole turns, which matter
    for half-integer spin.
    """
    if isinstance(value, RationalPhase):
        return value.as_fraction()
    return Fraction(value)


ZERO_PHASE = RationalPhase()
