"""Exact bifurcating (order-m) continued fractions.

Expands tuples of positive reals into coupled digit sequences, proves
eventual periodicity by exact state recurrence, evaluates rational
convergents, renders order-2 trees, and derives the period-1 closed-form
polynomials.
"""

from .arith import (
    FieldElement,
    GuardedDecimal,
    IntPolynomial,
    NumberField,
    Rational,
    RealValue,
    nf_invert,
    nf_mul,
    real_compare,
    real_floor,
    refine_root,
)
from .closedform import (
    CubicCandidate,
    allones_poly,
    alpha_cubic,
    alpha_root_interval,
    beta_cubic,
    cubic_hunt,
    verify_root,
)
from .evaluation import (
    DigitSpec,
    backward_values,
    convergent,
    convergent_table,
    reconstruct,
    render_tree,
    unroll,
)
from .expansion import Expansion, ExpansionState, expand, expand_step
from .periodicity import (
    APPARENT,
    NONE_WITHIN_DEPTH,
    PROVEN,
    PeriodReport,
    apparent_digit_period,
    detect_period,
)
from .sequences import kbonacci, ratio_limit

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "GuardedDecimal",
    "IntPolynomial",
    "NumberField",
    "Rational",
    "RealValue",
    "nf_invert",
    "nf_mul",
    "real_compare",
    "real_floor",
    "refine_root",
    "CubicCandidate",
    "allones_poly",
    "alpha_cubic",
    "alpha_root_interval",
    "beta_cubic",
    "cubic_hunt",
    "verify_root",
    "DigitSpec",
    "backward_values",
    "convergent",
    "convergent_table",
    "reconstruct",
    "render_tree",
    "unroll",
    "Expansion",
    "ExpansionState",
    "expand",
    "expand_step",
    "APPARENT",
    "NONE_WITHIN_DEPTH",
    "PROVEN",
    "PeriodReport",
    "apparent_digit_period",
    "detect_period",
    "kbonacci",
    "ratio_limit",
    "__version__",
]
