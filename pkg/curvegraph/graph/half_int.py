"""HalfInt class."""

import functools
from fractions import Fraction
from typing import Union

from ..utils.title_parsing import format_pi

_Number = Union["HalfInt", int, Fraction]


@functools.total_ordering
class HalfInt:
    """Exact half-integer stored as twice its value.

    nlm values and multiplicities are half-integers; floats never carry them.

    Examples:
        >>> HalfInt(3) # -> 3/2
        >>> HalfInt.of(2) + HalfInt(1) # -> 5/2
        >>> HalfInt(-3).positive() # -> 0
        >>> HalfInt(5).ntc_str() # -> '5*pi', i.e. 2*pi*(5/2)

    """

    __slots__ = ("doubled",)

    doubled: int

    def __init__(self, doubled: int = 0):
        """Create the half-integer `doubled / 2`."""
        if isinstance(doubled, bool) or int(doubled) != doubled:
            raise TypeError(f"HalfInt needs an integer doubled value, got {doubled!r}")
        object.__setattr__(self, "doubled", int(doubled))

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value: _Number) -> "HalfInt":
        """Build from an int, a Fraction with denominator 1 or 2, or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, int):
            return cls(2 * value)
        frac = Fraction(value)
        if (2 * frac).denominator != 1:
            raise ValueError(f"{value} is not a half-integer")
        return cls(int(2 * frac))

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse '3/2', '-1/2' or '4'."""
        return cls.of(Fraction(text.strip()))

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def positive(self) -> "HalfInt":
        """Return the positive part max(self, 0)."""
        return HalfInt(max(self.doubled, 0))

    def ntc_str(self) -> str:
        """Return 2*pi*self symbolically, e.g. '6*pi'."""
        return format_pi(Fraction(self.doubled))

    def as_json(self) -> str:
        return str(self)

    def __str__(self) -> str:
        return str(self.fraction)

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def __hash__(self) -> int:
        return hash(("HalfInt", self.doubled))

    def __float__(self) -> float:
        return self.doubled / 2

    def __bool__(self) -> bool:
        return self.doubled != 0

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.doubled)

    def __abs__(self) -> "HalfInt":
        return HalfInt(abs(self.doubled))

    def __add__(self, other: _Number) -> "HalfInt":
        other = self._convert_other(other)
        return HalfInt(self.doubled + other.doubled)

    def __radd__(self, other: _Number) -> "HalfInt":
        return self.__add__(other)

    def __sub__(self, other: _Number) -> "HalfInt":
        other = self._convert_other(other)
        return HalfInt(self.doubled - other.doubled)

    def __rsub__(self, other: _Number) -> "HalfInt":
        return -self.__sub__(other)

    def __mul__(self, other: int) -> "HalfInt":
        if not isinstance(other, int) or isinstance(other, bool):
            return NotImplemented
        return HalfInt(self.doubled * other)

    def __rmul__(self, other: int) -> "HalfInt":
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        try:
            other = self._convert_other(other)  # type: ignore
        except (TypeError, ValueError):
            return NotImplemented
        return self.doubled == other.doubled

    def __lt__(self, other: _Number) -> bool:
        other = self._convert_other(other)
        return self.doubled < other.doubled

    @staticmethod
    def _convert_other(other) -> "HalfInt":
        if isinstance(other, HalfInt):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return HalfInt.of(other)
        raise TypeError(f"Cannot combine HalfInt with {type(other).__name__}")
