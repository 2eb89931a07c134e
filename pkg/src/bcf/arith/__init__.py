"""Exact arithmetic backends: rationals, algebraic number fields, guarded decimals."""

from fractions import Fraction as Rational

from .guarded import GuardedDecimal
from .numberfield import FieldElement, NumberField, nf_invert, nf_mul
from .polynomials import IntPolynomial, eval_interval, refine_root
from .realvalue import (
    RealValue,
    backend_key,
    is_exact,
    real_compare,
    real_div,
    real_floor,
    real_is_zero,
    real_recip,
    real_sub_int,
)

__all__ = [
    "Rational",
    "GuardedDecimal",
    "FieldElement",
    "NumberField",
    "nf_invert",
    "nf_mul",
    "IntPolynomial",
    "eval_interval",
    "refine_root",
    "RealValue",
    "backend_key",
    "is_exact",
    "real_compare",
    "real_div",
    "real_floor",
    "real_is_zero",
    "real_recip",
    "real_sub_int",
]
