"""Arbitrary-precision building blocks.

Everything numeric in this package runs under an explicit
:class:`PrecisionContext`: ``target_bits`` of requested accuracy plus
``guard_bits`` of headroom that absorbs rounding and cancellation loss.
Real values are mpmath floats (``BigReal``), exact coefficients are
:class:`fractions.Fraction` (``BigRational``).  All operations use
round-to-nearest and a fixed evaluation order, so identical inputs under
an identical context produce bit-identical results and are safe to run
concurrently (every value here is immutable).

The module also provides exact Bernoulli numbers and arithmetic on
truncated formal power series, both of which back the series-based
coefficient computations elsewhere in the package.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath as mp

from .errors import NonInvertibleSeriesError, OrderMismatchError

__all__ = [
    "BigReal",
    "BigRational",
    "PrecisionContext",
    "DEFAULT_CONTEXT",
    "default_guard_bits",
    "decimal_digits",
    "to_decimal",
    "from_decimal",
    "rational_to_str",
    "rational_from_str",
    "bernoulli",
    "PowerSeries",
    "series_mul",
    "series_recip",
    "series_derivative",
]

BigReal = mp.mpf
BigRational = Fraction


@dataclass(frozen=True)
class PrecisionContext:
    """Precision policy for a computation.

    ``target_bits`` is the accuracy the caller wants in the result;
    ``guard_bits`` is extra working precision.  Every operation runs at
    ``working_bits = target_bits + guard_bits`` under round-to-nearest.
    """

    target_bits: int
    guard_bits: int = 64

    def __post_init__(self):
        if self.target_bits < 1:
            raise ValueError("target_bits must be positive")
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be nonnegative")

    @property
    def working_bits(self) -> int:
        return self.target_bits + self.guard_bits

    def workprec(self):
        """mpmath context manager switching to the working precision."""
        return mp.workprec(self.working_bits)

    def with_extra_guard(self, extra: int) -> "PrecisionContext":
        return PrecisionContext(self.target_bits, self.guard_bits + extra)


#: 192 target bits with 64 guard bits (256-bit working precision), enough
#: for coefficient cross-checks up to index ~30.
DEFAULT_CONTEXT = PrecisionContext(target_bits=192, guard_bits=64)


def default_guard_bits(n_max: int) -> int:
    """Guard-bit policy for coefficient tables up to index ``n_max``.

    Downstream binomial sums lose bits roughly linearly in the index, so
    the default grows with the highest index requested.
    """
    return max(64, 2 * n_max)


def decimal_digits(bits: int) -> int:
    """Significant decimal digits serializing a ``bits``-bit value.

    ceil(bits * 0.302), computed in exact integer arithmetic; slightly
    more than bits * log10(2), so a value round-trips through its decimal
    form with at most one unit of change in the last printed digit.
    """
    if bits < 1:
        raise ValueError("bits must be positive")
    return -((-bits * 302) // 1000)


def to_decimal(x: BigReal, bits: int) -> str:
    """Serialize ``x`` to a decimal string at the digit count implied by
    ``bits``.  Output grammar: optional sign, digits, optional '.',
    optional 'e'+-exponent."""
    if not isinstance(x, mp.mpf):
        # conversion rounds, so do it at the stated precision; an existing
        # mpf is formatted from its own mantissa, never re-rounded
        with mp.workprec(bits):
            x = mp.mpf(x)
    return mp.nstr(x, decimal_digits(bits), strip_zeros=False)


def from_decimal(text: str, bits: int) -> BigReal:
    """Parse a decimal string, rounding once to ``bits`` bits."""
    with mp.workprec(bits):
        return mp.mpf(text.strip())


def rational_to_str(q: BigRational) -> str:
    """Render a rational as ``num/den`` in lowest terms, denominator
    always explicit and positive."""
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(text: str) -> BigRational:
    num, _, den = text.strip().partition("/")
    return Fraction(int(num), int(den) if den else 1)


# --------------------------------------------------------------------------
# Bernoulli numbers
# --------------------------------------------------------------------------

_bernoulli_lock = threading.Lock()
_bernoulli_even: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...


def bernoulli(m: int) -> BigRational:
    """Exact Bernoulli number B_m.

    Convention: B_1 = -1/2; odd m > 1 gives exact zero (which keeps
    summation loops over even tail weights free of special cases).  Even
    values follow from the defining recurrence
    ``sum_{j=0}^{m} C(m+1, j) B_j = 0`` restricted to even indices with
    the B_1 term folded in, so results are exact rationals.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if m == 1:
        return Fraction(-1, 2)
    if m % 2 == 1:
        return Fraction(0)
    half = m // 2
    with _bernoulli_lock:
        cache = _bernoulli_even
        while len(cache) <= half:
            j = len(cache)
            n = 2 * j
            acc = Fraction(-(n + 1), 2)  # C(n+1, 1) * B_1
            for i in range(j):
                acc += math.comb(n + 1, 2 * i) * cache[i]
            cache.append(-acc / (n + 1))
        return cache[half]


# --------------------------------------------------------------------------
# Truncated formal power series
# --------------------------------------------------------------------------


class PowerSeries:
    """A formal power series ``sum_{i<=N} c_i s^i`` truncated at order N.

    Coefficients are BigReal; instances are immutable.  Arithmetic keeps
    the truncation order and is exact modulo ``s^(N+1)`` up to rounding
    at the working precision of the supplied context.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable, ctx: PrecisionContext = DEFAULT_CONTEXT):
        with ctx.workprec():
            coeffs = tuple(
                c if isinstance(c, mp.mpf) else mp.mpf(c) for c in coefficients
            )
        if not coeffs:
            raise ValueError("a series needs at least its constant coefficient")
        object.__setattr__(self, "coefficients", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def order(self) -> int:
        """Truncation order N (highest retained power)."""
        return len(self.coefficients) - 1

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        shown = ", ".join(mp.nstr(c, 8) for c in self.coefficients[:5])
        tail = ", ..." if len(self.coefficients) > 5 else ""
        return f"PowerSeries([{shown}{tail}], order={self.order})"

    def __call__(self, x, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
        """Evaluate the truncated polynomial at ``x`` (Horner)."""
        with ctx.workprec():
            acc = mp.mpf(0)
            for c in reversed(self.coefficients):
                acc = acc * x + c
            return acc


def series_mul(a: PowerSeries, b: PowerSeries,
               ctx: PrecisionContext = DEFAULT_CONTEXT) -> PowerSeries:
    """Cauchy product of two series of equal order, truncated at that order."""
    if a.order != b.order:
        raise OrderMismatchError(
            f"truncation orders differ: {a.order} != {b.order}")
    ac, bc = a.coefficients, b.coefficients
    out = []
    with ctx.workprec():
        for k in range(a.order + 1):
            acc = mp.mpf(0)
            for i in range(k + 1):
                acc += ac[i] * bc[k - i]
            out.append(acc)
    return PowerSeries(out, ctx)


def series_recip(a: PowerSeries, ctx: PrecisionContext = DEFAULT_CONTEXT) -> PowerSeries:
    """Series b with ``a * b = 1`` modulo ``s^(N+1)``.

    Requires a nonzero constant term; coefficients follow the standard
    forward recursion b_k = -(1/a_0) * sum_{i=1..k} a_i b_{k-i}.
    """
    ac = a.coefficients
    if ac[0] == 0:
        raise NonInvertibleSeriesError("constant term is zero")
    out = []
    with ctx.workprec():
        inv0 = mp.mpf(1) / ac[0]
        out.append(inv0)
        for k in range(1, a.order + 1):
            acc = mp.mpf(0)
            for i in range(1, k + 1):
                acc += ac[i] * out[k - i]
            out.append(-inv0 * acc)
    return PowerSeries(out, ctx)


def series_derivative(a: PowerSeries, ctx: PrecisionContext = DEFAULT_CONTEXT) -> PowerSeries:
    """Termwise derivative, truncated at order N-1.

    The derivative of an order-0 series is the zero series of order 0.
    """
    if a.order == 0:
        return PowerSeries([0], ctx)
    with ctx.workprec():
        out = [(i + 1) * c for i, c in enumerate(a.coefficients[1:])]
    return PowerSeries(out, ctx)
