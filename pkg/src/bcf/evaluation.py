"""Reconstruction of numbers from digit sequences.

Truncating at depth n assigns the bare digits as terminal values and runs
the recovery recurrence backward:

    x_m(i) = a_m(i) + 1 / x_1(i+1)
    x_k(i) = a_k(i) + x_(k+1)(i+1) / x_1(i+1)      (k = m-1 .. 1)

which is the algebraic inverse of the expansion step.  All convergents are
exact rationals.  The order-2 case also renders as the two-branch tree
where a-nodes split into (b_(i+1) over a_(i+1)) and b-nodes into
(1 over a_(i+1)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    InsufficientDigits,
    NoConvergence,
    UnsupportedOrder,
    ZeroTail,
)
from .expansion import Expansion
from .periodicity import PROVEN, PeriodReport


@dataclass(frozen=True)
class DigitSpec:
    """m digit sequences: a finite head plus an optional repeating cycle."""

    order: int
    head: tuple[tuple[int, ...], ...]
    cycle: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        m = self.order
        if m < 1:
            raise ValueError("order must be >= 1")
        if len(self.head) != m:
            raise ValueError(f"expected {m} head sequences, got {len(self.head)}")
        head_lens = {len(seq) for seq in self.head}
        if len(head_lens) > 1:
            raise ValueError("head sequences must share one length")
        _check_digits(self.head, "head")
        if self.cycle is not None:
            if len(self.cycle) != m:
                raise ValueError(f"expected {m} cycle sequences, got {len(self.cycle)}")
            cycle_lens = {len(seq) for seq in self.cycle}
            if cycle_lens != {len(self.cycle[0])} or len(self.cycle[0]) == 0:
                raise ValueError("cycle sequences must share one positive length")
            _check_digits(self.cycle, "cycle")
            for d in self.cycle[0]:
                if d < 1:
                    raise ValueError(
                        "first-sequence cycle digits must be >= 1 (each recurs "
                        "at indices >= 1)"
                    )
        for i, d in enumerate(self.head[0]):
            if i >= 1 and d < 1:
                raise ValueError(
                    f"first-sequence digit at index {i} must be >= 1, got {d}"
                )

    @property
    def head_length(self) -> int:
        return len(self.head[0])

    @property
    def max_depth(self) -> int | None:
        """Deepest valid truncation index; None when a cycle extends forever."""
        if self.cycle is not None:
            return None
        return self.head_length - 1

    @classmethod
    def constant(cls, digits: Sequence[int]) -> "DigitSpec":
        """Cycle-only spec repeating one digit tuple forever."""
        return cls(
            order=len(digits),
            head=tuple(() for _ in digits),
            cycle=tuple((int(d),) for d in digits),
        )

    @classmethod
    def from_expansion(
        cls, exp: Expansion, period: PeriodReport | None = None
    ) -> "DigitSpec":
        """Digit spec of an expansion; a proven period folds into the cycle."""
        if period is not None and period.status == PROVEN:
            p, q = period.preperiod, period.period
            return cls(
                order=exp.order,
                head=tuple(seq[:p] for seq in exp.digits),
                cycle=tuple(seq[p : p + q] for seq in exp.digits),
            )
        return cls(order=exp.order, head=tuple(exp.digits), cycle=None)


def _check_digits(seqs, label: str):
    for seq in seqs:
        for d in seq:
            if not isinstance(d, int):
                raise ValueError(f"{label} digits must be integers, got {d!r}")
            if d < 0:
                raise ValueError(f"{label} digits must be >= 0, got {d}")


def unroll(spec: DigitSpec, depth: int) -> list[list[int]]:
    """Digits of every sequence through index ``depth`` (depth+1 each)."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    need = depth + 1
    if spec.cycle is None and need > spec.head_length:
        raise InsufficientDigits(
            f"spec holds {spec.head_length} digits per sequence, need {need} "
            "and no cycle is present"
        )
    out: list[list[int]] = []
    for k in range(spec.order):
        seq = list(spec.head[k])
        if len(seq) < need:
            cyc = spec.cycle[k]
            while len(seq) < need:
                seq.extend(cyc)
        out.append(seq[:need])
    return out


def backward_values(spec: DigitSpec, depth: int) -> list[tuple[Fraction, ...]]:
    """Per-step value tuples of the depth-``depth`` truncation.

    Index i of the result holds (x_1(i), ..., x_m(i)); index 0 is the
    convergent tuple itself.
    """
    digits = unroll(spec, depth)
    m = spec.order
    n = depth
    # A zero terminal first-sequence digit would make the tail blow up;
    # shorten the truncation instead (only reachable at n >= 1 for specs
    # built outside the validated constructor).
    while n >= 1 and digits[0][n] == 0:
        n -= 1
    values: list[tuple[Fraction, ...]] = [()] * (n + 1)
    values[n] = tuple(Fraction(digits[k][n]) for k in range(m))
    for i in range(n - 1, -1, -1):
        nxt = values[i + 1]
        x1 = nxt[0]
        if x1 == 0:
            raise ZeroTail(f"first-sequence value at step {i + 1} is zero")
        row = [Fraction(0)] * m
        row[m - 1] = digits[m - 1][i] + 1 / x1
        for k in range(m - 2, -1, -1):
            row[k] = digits[k][i] + nxt[k + 1] / x1
        values[i] = tuple(row)
    return values


def convergent(spec: DigitSpec, depth: int) -> tuple[Fraction, ...]:
    """Exact rational convergent tuple at truncation ``depth``."""
    return backward_values(spec, depth)[0]


def convergent_table(spec: DigitSpec, upto: int) -> list[tuple[Fraction, ...]]:
    """Convergents at every depth 0..upto."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    return [convergent(spec, n) for n in range(upto + 1)]


def reconstruct(
    spec: DigitSpec, tol, max_depth: int = 1000
) -> tuple[tuple[Fraction, ...], Fraction]:
    """Convergent tuple deep enough that three consecutive depth steps each
    moved every component by less than ``tol``.

    Returns (tuple, observed bound).  This is an empirical stopping rule,
    not an error proof.  A finite (cycle-free) spec evaluates exactly at
    its terminal depth with bound 0.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if spec.cycle is None:
        return convergent(spec, spec.head_length - 1), Fraction(0)
    prev = convergent(spec, 0)
    recent: list[Fraction] = []
    for n in range(1, max_depth + 1):
        cur = convergent(spec, n)
        diff = max(abs(a - b) for a, b in zip(cur, prev))
        prev = cur
        if diff < tol:
            recent.append(diff)
            if len(recent) == 3:
                return cur, max(recent)
        else:
            recent.clear()
    raise NoConvergence(
        f"convergents still moved >= {tol} after depth {max_depth}"
    )


def render_tree(spec: DigitSpec, depth: int, which: str = "alpha") -> str:
    """ASCII rendering of the order-2 tree down to ``depth`` levels.

    a-nodes branch into (up: b_(i+1), dn: a_(i+1)); b-nodes into
    (up: literal 1, dn: a_(i+1)); a node at the depth limit shows just its
    digit.  The legend states the combination rule.
    """
    if spec.order != 2:
        raise UnsupportedOrder(
            f"tree rendering is defined for order 2 only, got order {spec.order}"
        )
    if which not in ("alpha", "beta"):
        raise ValueError("which must be 'alpha' or 'beta'")
    if not 0 <= depth <= 6:
        raise ValueError("tree depth must be between 0 and 6")
    digits = unroll(spec, depth)

    def node(kind: str, level: int) -> list[str]:
        if kind == "one":
            return ["1"]
        value = digits[0][level] if kind == "a" else digits[1][level]
        if level == depth:
            return [str(value)]
        if kind == "a":
            up = node("b", level + 1)
            dn = node("a", level + 1)
        else:
            up = node("one", level + 1)
            dn = node("a", level + 1)
        lines = [str(value)]
        lines.append("+- up: " + up[0])
        lines.extend("|      " + rest for rest in up[1:])
        lines.append("`- dn: " + dn[0])
        lines.extend("       " + rest for rest in dn[1:])
        return lines

    root = "a" if which == "alpha" else "b"
    body = node(root, 0)
    header = [
        f"{which} tree, depth {depth}",
        "node p with branches (up: q, dn: r) stands for p + q/r",
    ]
    return "\n".join(header + body) + "\n"
