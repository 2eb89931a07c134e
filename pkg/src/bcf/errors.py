"""Exception taxonomy.

The four base classes mirror the CLI exit codes: parse errors exit 2,
precision failures exit 3, algebra failures exit 4, unsupported requests
exit 5.
"""


class BcfError(Exception):
    pass


class ParseError(BcfError):
    """Malformed value spec, digit file, or out-of-range request."""


class InsufficientDigits(ParseError):
    """A digit spec without a cycle was asked for more digits than it holds."""


class PrecisionError(BcfError):
    """The available precision cannot support the requested decision."""


class AmbiguousFloor(PrecisionError):
    """A guarded decimal sits within its guard band of an integer.

    ``extra_digits_hint`` estimates how many more trusted digits would
    resolve the floor; ``None`` when the value may be exactly integral.
    """

    def __init__(self, message: str, extra_digits_hint: "int | None" = None):
        super().__init__(message)
        self.extra_digits_hint = extra_digits_hint


class AmbiguousComparison(PrecisionError):
    """A comparison falls inside the guard band and is refused."""


class PrecisionTooLow(PrecisionError):
    """An input approximation is too coarse for the requested tolerance."""


class NoConvergence(PrecisionError):
    """Convergents kept oscillating above tolerance up to the depth limit."""


class AlgebraError(BcfError):
    pass


class MixedFields(AlgebraError):
    """Operands belong to different number fields (or mixed backends)."""


class ZeroInverse(AlgebraError):
    """Multiplicative inverse of zero requested."""


class ReducibleModulus(AlgebraError):
    """Inversion found a nontrivial factor of the field modulus.

    ``factor`` is the discovered factor (an integer polynomial).
    """

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class NonMonicModulus(AlgebraError):
    """Field moduli must be monic integer polynomials of degree >= 2."""


class NonIsolatingInterval(AlgebraError):
    """An interval fails to isolate a single real root (sign anomaly)."""


class NoSignChange(AlgebraError):
    """Root refinement requires strictly opposite signs at the endpoints."""


class ZeroTail(AlgebraError):
    """Backward evaluation hit a zero first-sequence tail value."""


class UnsupportedError(BcfError):
    pass


class UnsupportedOrder(UnsupportedError):
    """Operation defined only for a specific expansion order."""


class InexactBackend(UnsupportedError):
    """Proven periodicity needs exact state snapshots."""


class NegativeInput(UnsupportedError):
    """Expansion inputs must be non-negative reals."""
