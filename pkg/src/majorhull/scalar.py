"""Scalar modes: exact rationals or floats compared with a slack ``eps``."""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


@dataclass(frozen=True)
class ScalarMode:
    kind: str = "float"
    eps: float = 1e-9

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown scalar mode {self.kind!r}")
        if self.kind == "float" and not self.eps > 0:
            raise ValueError("eps must be positive in float mode")

    @property
    def exact(self):
        return self.kind == "exact"

    def coerce(self, value):
        """Convert ``value`` to this mode's scalar type.

        Floats entering exact mode are read through their shortest decimal
        repr, so ``0.9`` becomes ``9/10`` rather than its binary expansion.
        """
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if self.exact:
            if isinstance(value, Rational):
                return Fraction(value)
            if isinstance(value, float):
                if value != value or value in (float("inf"), float("-inf")):
                    raise ValueError("non-finite scalar")
                return Fraction(repr(value))
            if isinstance(value, str):
                return Fraction(value)
            return Fraction(float(value))
        out = float(value)
        if out != out or out in (float("inf"), float("-inf")):
            raise ValueError("non-finite scalar")
        return out

    def vector(self, values):
        return [self.coerce(v) for v in values]

    def le(self, a, b, slack=1):
        """``a <= b`` allowing ``slack * eps`` in float mode."""
        if self.exact:
            return a <= b
        return a <= b + slack * self.eps

    def eq(self, a, b, slack=1):
        if self.exact:
            return a == b
        return abs(a - b) <= slack * self.eps


EXACT = ScalarMode("exact")
FLOAT = ScalarMode("float")
