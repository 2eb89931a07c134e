"""Order-m continued fraction expansion.

An m-tuple of positive reals (x_1, ..., x_m) yields m coupled digit
sequences by iterating

    a_k = floor(x_k)                      (k = 1..m)
    f_k = x_k - a_k
    next state = (1/f_m, f_1/f_m, ..., f_(m-1)/f_m)

with termination when f_m is exactly zero.  m = 1 is the classical
continued fraction.  With an exact backend every state is snapshotted so
periodicity can later be proven by exact recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith.realvalue import (
    RealValue,
    backend_key,
    is_exact,
    real_div,
    real_floor,
    real_is_zero,
    real_recip,
    real_sub_int,
)
from .errors import MixedFields, NegativeInput


@dataclass(frozen=True)
class ExpansionState:
    """The value tuple entering step ``step``; equality of ``values`` across
    steps is what periodicity detection looks for."""

    values: tuple[RealValue, ...]
    step: int

    @property
    def order(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Expansion:
    """m digit sequences plus optional exact state snapshots.

    ``digits[k][i]`` is the step-i digit of sequence k+1.  ``states[i]``
    (exact backends only) is the state that produced step i's digits.
    ``terminated_at`` is the step whose m-th fractional part was exactly
    zero, or None.
    """

    order: int
    digits: tuple[tuple[int, ...], ...]
    terminated_at: int | None
    states: tuple[ExpansionState, ...] | None

    def __len__(self) -> int:
        return len(self.digits[0])

    @property
    def is_terminated(self) -> bool:
        return self.terminated_at is not None

    def digit_columns(self) -> list[tuple[int, ...]]:
        return [tuple(seq[i] for seq in self.digits) for i in range(len(self))]


def expand_step(state: ExpansionState) -> tuple[tuple[int, ...], ExpansionState | None]:
    """One expansion step: the digit tuple and the next state (None on
    exact termination)."""
    digits = tuple(real_floor(v) for v in state.values)
    for k, d in enumerate(digits):
        if d < 0:
            raise NegativeInput(
                f"component {k + 1} at step {state.step} has negative floor {d}; "
                "only non-negative reals are expandable"
            )
    fracs = tuple(real_sub_int(v, d) for v, d in zip(state.values, digits))
    last = fracs[-1]
    if real_is_zero(last):
        return digits, None
    inv = real_recip(last)
    next_values = (inv,) + tuple(real_div(f, last) for f in fracs[:-1])
    return digits, ExpansionState(next_values, state.step + 1)


def expand(values: Sequence[RealValue | int], max_depth: int) -> Expansion:
    """Iterate expand_step up to ``max_depth`` digit tuples or termination."""
    if max_depth < 1:
        raise ValueError("max_depth must be >= 1")
    vals = tuple(Fraction(v) if isinstance(v, int) else v for v in values)
    if not vals:
        raise ValueError("at least one value required")
    keys = {backend_key(v) for v in vals}
    if len(keys) > 1:
        raise MixedFields(
            "all expansion inputs must share one backend (and one field); got "
            + ", ".join(sorted(str(k) for k in keys))
        )
    exact = all(is_exact(v) for v in vals)

    m = len(vals)
    sequences: list[list[int]] = [[] for _ in range(m)]
    states: list[ExpansionState] = []
    terminated_at: int | None = None

    state: ExpansionState | None = ExpansionState(vals, 0)
    for i in range(max_depth):
        assert state is not None
        if exact:
            states.append(state)
        digits, state = expand_step(state)
        for seq, d in zip(sequences, digits):
            seq.append(d)
        if i >= 1 and digits[0] < 1:
            raise AssertionError(
                f"first-sequence digit {digits[0]} < 1 at step {i}; "
                "expansion invariant broken"
            )
        if state is None:
            terminated_at = i
            break

    return Expansion(
        order=m,
        digits=tuple(tuple(seq) for seq in sequences),
        terminated_at=terminated_at,
        states=tuple(states) if exact else None,
    )
