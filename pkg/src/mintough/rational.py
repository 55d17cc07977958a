"""Nonnegative rationals extended with infinity, for toughness values."""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union

Number = Union[int, Fraction, "ExtendedRational"]


@total_ordering
class ExtendedRational:
    """Either a finite rational kept in lowest terms, or :data:`INFINITY`.

    Infinity compares above every finite value and equals only itself.
    """

    __slots__ = ("_value",)

    def __init__(self, num: int | Fraction = 0, den: int = 1, *, infinite: bool = False):
        if infinite:
            self._value = None
        else:
            if den == 0:
                raise ZeroDivisionError("denominator must be nonzero")
            self._value = Fraction(num, den)

    @classmethod
    def of(cls, x: Number) -> "ExtendedRational":
        if isinstance(x, ExtendedRational):
            return x
        return cls(Fraction(x))

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def fraction(self) -> Fraction:
        if self._value is None:
            raise ValueError("infinite value has no fraction")
        return self._value

    @property
    def num(self) -> int:
        return self.fraction.numerator

    @property
    def den(self) -> int:
        return self.fraction.denominator

    def _key(self, other):
        other = ExtendedRational.of(other)
        return self._value, other._value

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ExtendedRational, int, Fraction)):
            return NotImplemented
        a, b = self._key(other)
        return a == b

    def __lt__(self, other) -> bool:
        if not isinstance(other, (ExtendedRational, int, Fraction)):
            return NotImplemented
        a, b = self._key(other)
        if a is None:
            return False
        if b is None:
            return True
        return a < b

    def __hash__(self) -> int:
        return hash(("inf",)) if self._value is None else hash(self._value)

    def __str__(self) -> str:
        return "inf" if self._value is None else str(self._value)

    def __repr__(self) -> str:
        return f"ExtendedRational({self})"

    def to_json(self):
        if self._value is None:
            return "inf"
        return {"num": self.num, "den": self.den}

    @classmethod
    def from_json(cls, obj) -> "ExtendedRational":
        if obj == "inf":
            return INFINITY
        return cls(obj["num"], obj["den"])


INFINITY = ExtendedRational(infinite=True)
ZERO = ExtendedRational(0)
