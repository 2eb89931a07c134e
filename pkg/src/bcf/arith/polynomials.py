"""Integer polynomials with exact evaluation and bisection root refinement.

All interval endpoints are rationals, never floats: a floor or sign
decision made here is a proof, not an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import NoSignChange


@dataclass(frozen=True)
class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree.

    ``coeffs[0]`` is the constant term.  Canonical form strips trailing
    zeros; the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        trimmed = _trim_int(self.coeffs)
        if trimmed != self.coeffs:
            object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def eval_interval(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        return eval_interval(self.coeffs, lo, hi)

    def pretty(self, var: str = "x") -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            elif k == 1:
                term = var if mag == 1 else f"{mag}*{var}"
            else:
                term = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.pretty()


def _trim_int(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def eval_interval(coeffs: Sequence, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Sound interval Horner evaluation over [lo, hi]."""
    if lo > hi:
        raise ValueError("interval endpoints out of order")
    if not coeffs:
        return Fraction(0), Fraction(0)
    acc_lo = acc_hi = Fraction(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        p1, p2, p3, p4 = acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi
        acc_lo = min(p1, p2, p3, p4) + c
        acc_hi = max(p1, p2, p3, p4) + c
    return acc_lo, acc_hi


def bisect_once(poly: IntPolynomial, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """One bisection step preserving the sign change of ``poly`` on (lo, hi).

    Assumes the endpoints carry strictly opposite signs.  If the midpoint
    is an exact root the interval is shrunk symmetrically around it instead.
    """
    mid = (lo + hi) / 2
    s_lo = poly.sign_at(lo)
    s_mid = poly.sign_at(mid)
    if s_mid == 0:
        return _shrink_around_root(poly, lo, hi, mid)
    if s_mid == s_lo:
        return mid, hi
    return lo, mid


def _shrink_around_root(poly: IntPolynomial, lo: Fraction, hi: Fraction, root: Fraction):
    eps = min(hi - root, root - lo) / 2
    for _ in range(64):
        a, b = root - eps, root + eps
        if poly.sign_at(a) * poly.sign_at(b) < 0:
            return a, b
        eps /= 2
    raise NoSignChange(
        f"exact root at {root} has no sign change across it (even multiplicity?)"
    )


def refine_root(
    poly: IntPolynomial,
    interval: tuple[Fraction, Fraction],
    width: Fraction,
) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change bracket of ``poly`` to at most ``width``.

    The result is nested inside ``interval`` and still brackets the root;
    endpoints stay exact rationals.  Raises NoSignChange when the input
    endpoints do not have strictly opposite signs.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if poly.sign_at(lo) * poly.sign_at(hi) >= 0:
        raise NoSignChange(f"no sign change of {poly} on [{lo}, {hi}]")
    while hi - lo > width:
        lo, hi = bisect_once(poly, lo, hi)
    return lo, hi


# Rational-coefficient polynomial helpers (ascending tuples of Fractions).
# These back the number-field arithmetic; they are not a public surface.

def qp_trim(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def qp_deg(coeffs: Sequence[Fraction]) -> int:
    return len(qp_trim(coeffs)) - 1


def qp_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return qp_trim(out)


def qp_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return qp_trim(out)


def qp_scale(a: Sequence[Fraction], s: Fraction) -> tuple[Fraction, ...]:
    if s == 0:
        return ()
    return qp_trim([ai * s for ai in a])


def qp_divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    b = qp_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(qp_trim(a))
    db = len(b) - 1
    lead = b[-1]
    quo = [Fraction(0)] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = rem[-1] / lead
        quo[shift] = factor
        for j in range(db + 1):
            rem[shift + j] -= factor * b[j]
        while rem and rem[-1] == 0:
            rem.pop()
    return qp_trim(quo), qp_trim(rem)


def qp_ext_gcd(a: Sequence[Fraction], b: Sequence[Fraction]):
    """Extended Euclid over Q[x]: returns (g, u, v) with u*a + v*b = g."""
    old_r, r = qp_trim(a), qp_trim(b)
    old_u, u = (Fraction(1),), ()
    old_v, v = (), (Fraction(1),)
    while r:
        q, rem = qp_divmod(old_r, r)
        old_r, r = r, rem
        old_u, u = u, qp_sub(old_u, qp_mul(q, u))
        old_v, v = v, qp_sub(old_v, qp_mul(q, v))
    return old_r, old_u, old_v


def qp_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Fraction, ...]:
    g, _, _ = qp_ext_gcd(a, b)
    return g


def qp_primitive_int(coeffs: Sequence[Fraction]) -> IntPolynomial:
    """Primitive integer polynomial with positive leading coefficient."""
    from math import gcd, lcm

    coeffs = qp_trim(coeffs)
    if not coeffs:
        return IntPolynomial(())
    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    content = gcd(*(abs(c) for c in ints))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(tuple(ints))
