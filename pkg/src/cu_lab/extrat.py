"""Exact nonnegative rationals extended by a single point at infinity."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

from .errors import ParseError

Number = Union[int, Fraction, "ExtRat"]


@total_ordering
class ExtRat:
    """A value in ``[0, inf]`` with rational finite part.

    Arithmetic is exact and never negative. ``INF + q == INF`` and
    ``0 * INF == 0`` (the convention used for integer multiples).
    """

    __slots__ = ("_q",)

    def __init__(self, value: Number | str = 0):
        if isinstance(value, ExtRat):
            q = value._q
        elif isinstance(value, str):
            q = ExtRat.parse(value)._q
        elif isinstance(value, (int, Rational)) and not isinstance(value, bool):
            q = Fraction(value)
            if q < 0:
                raise ValueError(f"negative value {value!r}")
        else:
            raise TypeError(f"cannot build ExtRat from {value!r}")
        object.__setattr__(self, "_q", q)

    def __setattr__(self, name, value):
        raise AttributeError("ExtRat is immutable")

    @classmethod
    def inf(cls) -> ExtRat:
        obj = object.__new__(cls)
        object.__setattr__(obj, "_q", None)
        return obj

    @classmethod
    def parse(cls, text: str) -> ExtRat:
        t = text.strip()
        if t.lower() in ("inf", "oo", "∞"):
            return INF
        try:
            q = Fraction(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {text!r}") from exc
        if "." in t or "e" in t.lower():
            raise ParseError(f"decimal literals are not accepted: {text!r}")
        if q < 0:
            raise ParseError(f"negative value {text!r}")
        return cls(q)

    @property
    def is_inf(self) -> bool:
        return self._q is None

    @property
    def fraction(self) -> Fraction:
        if self._q is None:
            raise ValueError("INF has no finite value")
        return self._q

    @property
    def is_zero(self) -> bool:
        return self._q == 0

    # arithmetic

    def __add__(self, other: Number) -> ExtRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._q is None or other._q is None:
            return INF
        return ExtRat(self._q + other._q)

    __radd__ = __add__

    def __mul__(self, other: Number) -> ExtRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._q == 0 or other._q == 0:
            return ZERO
        if self._q is None or other._q is None:
            return INF
        return ExtRat(self._q * other._q)

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> ExtRat:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._q == 0:
            raise ZeroDivisionError("division by zero")
        if other._q is None:
            if self._q is None:
                raise ValueError("inf / inf is undefined")
            return ZERO
        if self._q is None:
            return INF
        return ExtRat(self._q / other._q)

    def monus(self, other: Number) -> ExtRat:
        """Truncated difference ``max(self - other, 0)``; ``inf - inf`` is an error."""
        other = _coerce(other)
        if self._q is None:
            if other._q is None:
                raise ValueError("inf - inf is undefined")
            return INF
        if other._q is None:
            return ZERO
        return ExtRat(max(self._q - other._q, Fraction(0)))

    # comparison

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._q == other._q

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._q is None:
            return False
        if other._q is None:
            return True
        return self._q < other._q

    def __hash__(self) -> int:
        return hash(self._q) if self._q is not None else hash("ExtRat.INF")

    def __bool__(self) -> bool:
        return self._q != 0

    def __str__(self) -> str:
        if self._q is None:
            return "inf"
        return str(self._q)

    def __repr__(self) -> str:
        return f"ExtRat('{self}')"

    def __reduce__(self):
        return (ExtRat.parse, (str(self),))


def _coerce(value) -> ExtRat:
    if isinstance(value, ExtRat):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        if value < 0:
            raise ValueError(f"negative value {value!r}")
        return ExtRat(value)
    return NotImplemented


ZERO = ExtRat(0)
ONE = ExtRat(1)
INF = ExtRat.inf()


def ratio(num: int, den: int) -> ExtRat:
    """``num/den`` as an ExtRat (``den`` must be positive)."""
    if den <= 0:
        raise ZeroDivisionError("nonpositive denominator")
    return ExtRat(Fraction(num, den))
