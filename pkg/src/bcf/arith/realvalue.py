"""Dispatch layer over the three value backends.

A RealValue is a plain Fraction, a FieldElement, or a GuardedDecimal.
The expansion loop only needs floor, subtract-integer, reciprocal,
same-backend division, and compare-to-rational; these helpers give all
three backends one calling convention without wrapping Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Union

from ..errors import AmbiguousFloor, MixedFields, ZeroInverse
from .guarded import GuardedDecimal
from .numberfield import FieldElement

RealValue = Union[Fraction, FieldElement, GuardedDecimal]


def real_floor(x: RealValue) -> int:
    """Greatest integer <= x; exact for Fraction and FieldElement."""
    if isinstance(x, Fraction):
        return floor(x)
    if isinstance(x, (FieldElement, GuardedDecimal)):
        return x.floor()
    raise TypeError(f"not a real value: {x!r}")


def real_sub_int(x: RealValue, n: int) -> RealValue:
    if isinstance(x, Fraction):
        return x - n
    if isinstance(x, FieldElement):
        return x - n
    if isinstance(x, GuardedDecimal):
        return x.sub_int(n)
    raise TypeError(f"not a real value: {x!r}")


def real_is_zero(x: RealValue) -> bool:
    """Exact zero test; refuses when a guard band straddles zero."""
    if isinstance(x, Fraction):
        return x == 0
    if isinstance(x, FieldElement):
        return x.is_zero()
    if isinstance(x, GuardedDecimal):
        if x.is_certainly_nonzero():
            return False
        raise AmbiguousFloor(
            f"cannot decide whether {x.value} +/- {x.radius} is zero; "
            "supply more trusted digits (or use an exact rat:/alg: value)"
        )
    raise TypeError(f"not a real value: {x!r}")


def real_recip(x: RealValue) -> RealValue:
    if isinstance(x, Fraction):
        if x == 0:
            raise ZeroInverse("reciprocal of zero")
        return 1 / x
    if isinstance(x, FieldElement):
        return x.inverse()
    if isinstance(x, GuardedDecimal):
        return x.reciprocal()
    raise TypeError(f"not a real value: {x!r}")


def real_div(x: RealValue, y: RealValue) -> RealValue:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        if y == 0:
            raise ZeroInverse("division by zero")
        return x / y
    if isinstance(x, FieldElement) and isinstance(y, FieldElement):
        return x / y
    if isinstance(x, GuardedDecimal) and isinstance(y, GuardedDecimal):
        return x.divide(y)
    raise MixedFields(f"cannot divide {type(x).__name__} by {type(y).__name__}")


def real_compare(x: RealValue, q) -> int:
    """Sign of (x - q) for rational q; guarded decimals may refuse."""
    q = Fraction(q)
    if isinstance(x, Fraction):
        return (x > q) - (x < q)
    if isinstance(x, (FieldElement, GuardedDecimal)):
        return x.compare_fraction(q)
    raise TypeError(f"not a real value: {x!r}")


def is_exact(x: RealValue) -> bool:
    return not isinstance(x, GuardedDecimal)


def backend_key(x: RealValue):
    """Hashable token identifying the backend (and field) of a value."""
    if isinstance(x, Fraction):
        return "rational"
    if isinstance(x, FieldElement):
        return ("field", x.field)
    if isinstance(x, GuardedDecimal):
        return "guarded"
    raise TypeError(f"not a real value: {x!r}")
