"""Decimal literals with an explicit band of untrusted digits.

A guarded decimal is an exact rational midpoint plus an exact rational
radius: the true value is only known to lie in [value - radius,
value + radius].  Every decision that would depend on digits inside the
band is refused instead of guessed, because a single wrong floor corrupts
every later digit of an expansion.

Parsed literals keep their mantissa/scale/guard fields; arithmetic results
carry the propagated interval only.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import ceil, floor, log10

from ..errors import AmbiguousComparison, AmbiguousFloor

_LITERAL_RE = re.compile(r"^[+-]?[0-9]+(\.[0-9]+)?$")


class GuardedDecimal:
    __slots__ = ("value", "radius", "mantissa", "scale", "guard_digits")

    def __init__(self, value, radius, mantissa=None, scale=None, guard_digits=None):
        self.value = Fraction(value)
        self.radius = Fraction(radius)
        if self.radius <= 0:
            raise ValueError("guard radius must be positive")
        self.mantissa = mantissa
        self.scale = scale
        self.guard_digits = guard_digits

    @classmethod
    def from_parts(cls, mantissa: int, scale: int, guard_digits: int) -> "GuardedDecimal":
        if guard_digits < 1:
            raise ValueError("guard_digits must be >= 1")
        value = Fraction(mantissa, 10**scale)
        radius = Fraction(10**guard_digits, 10**scale)
        return cls(value, radius, mantissa=mantissa, scale=scale, guard_digits=guard_digits)

    @classmethod
    def from_literal(cls, text: str, guard_digits: int = 1) -> "GuardedDecimal":
        if not _LITERAL_RE.match(text):
            raise ValueError(f"not a decimal literal: {text!r}")
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        if "." in body:
            intpart, fracpart = body.split(".")
        else:
            intpart, fracpart = body, ""
        mantissa = sign * int(intpart + fracpart or "0")
        return cls.from_parts(mantissa, len(fracpart), guard_digits)

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.value - self.radius, self.value + self.radius

    def __repr__(self) -> str:
        return f"GuardedDecimal({self.value} +/- {self.radius})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, GuardedDecimal):
            return NotImplemented
        return self.value == other.value and self.radius == other.radius

    def __hash__(self) -> int:
        return hash((self.value, self.radius))

    # -- guarded decisions ---------------------------------------------------

    def floor(self) -> int:
        lo, hi = self.bounds()
        flo, fhi = floor(lo), floor(hi)
        if flo == fhi:
            return flo
        hint = self._extra_digits_to(fhi)
        raise AmbiguousFloor(
            f"value {self.value} is within +/-{self.radius} of integer {fhi}; "
            + (
                f"supply at least {hint} more trusted digit(s)"
                if hint is not None
                else "the value may be exactly integral"
            ),
            extra_digits_hint=hint,
        )

    def _extra_digits_to(self, n: int) -> int | None:
        gap = abs(self.value - n)
        if gap == 0:
            return None
        return max(1, ceil(log10(self.radius / gap)) + 1)

    def compare_fraction(self, q) -> int:
        q = Fraction(q)
        lo, hi = self.bounds()
        if q < lo:
            return 1
        if q > hi:
            return -1
        raise AmbiguousComparison(
            f"comparison of {self.value} +/- {self.radius} against {q} "
            "falls inside the guard band"
        )

    def is_certainly_nonzero(self) -> bool:
        lo, hi = self.bounds()
        return lo > 0 or hi < 0

    # -- interval arithmetic ---------------------------------------------------

    def sub_int(self, n: int) -> "GuardedDecimal":
        return GuardedDecimal(self.value - n, self.radius)

    def reciprocal(self) -> "GuardedDecimal":
        lo, hi = self.bounds()
        if lo <= 0 <= hi:
            raise AmbiguousFloor(
                f"cannot invert {self.value} +/- {self.radius}: the guard band "
                "reaches zero; supply more trusted digits"
            )
        new_lo, new_hi = 1 / hi, 1 / lo
        if new_lo > new_hi:
            new_lo, new_hi = new_hi, new_lo
        return _from_bounds(new_lo, new_hi)

    def divide(self, other: "GuardedDecimal") -> "GuardedDecimal":
        a, b = self.bounds()
        c, d = other.bounds()
        if c <= 0 <= d:
            raise AmbiguousFloor(
                f"cannot divide by {other.value} +/- {other.radius}: the guard "
                "band reaches zero; supply more trusted digits"
            )
        quotients = (a / c, a / d, b / c, b / d)
        return _from_bounds(min(quotients), max(quotients))


def _from_bounds(lo: Fraction, hi: Fraction) -> GuardedDecimal:
    return GuardedDecimal((lo + hi) / 2, (hi - lo) / 2)
