"""Exact elements of Q/Z.

A :class:`Phase` ``t`` stands for the root of unity ``exp(2 pi i t)``, so the
multiplicative group of roots of unity becomes additive arithmetic on reduced
fractions in ``[0, 1)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

MAX_DENOMINATOR = 10**6


@total_ordering
class Phase:
    __slots__ = ("_value",)

    def __init__(self, numerator=0, denominator: int = 1):
        if isinstance(numerator, Phase):
            value = numerator._value
        else:
            value = Fraction(numerator, denominator)
        self._value = value - (value.numerator // value.denominator)

    @classmethod
    def parse(cls, text: str, max_denominator: int = MAX_DENOMINATOR) -> Phase:
        """Read ``"a/b"`` (or an integer) exactly; the result is reduced mod 1."""
        text = str(text).strip()
        try:
            num, _, den = text.partition("/")
            value = Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact fraction: {text!r}") from None
        if value.denominator > max_denominator:
            raise ValueError(f"denominator of {text!r} exceeds {max_denominator}")
        return cls(value)

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    @property
    def fraction(self) -> Fraction:
        return self._value

    def is_zero(self) -> bool:
        return self._value == 0

    def __add__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._value + other._value)

    def __sub__(self, other: Phase) -> Phase:
        if not isinstance(other, Phase):
            return NotImplemented
        return Phase(self._value - other._value)

    def __neg__(self) -> Phase:
        return Phase(-self._value)

    def __mul__(self, n: int) -> Phase:
        if not isinstance(n, int):
            return NotImplemented
        return Phase(self._value * n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Phase):
            return self._value == other._value
        if isinstance(other, (int, Fraction)):
            return self == Phase(other)
        return NotImplemented

    def __lt__(self, other: Phase) -> bool:
        return self._value < other._value

    def __hash__(self) -> int:
        return hash(self._value)

    def __str__(self) -> str:
        if self.numerator == 0:
            return "0"
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self) -> str:
        return f"Phase({self.numerator}, {self.denominator})"


ZERO = Phase(0)
HALF = Phase(1, 2)
