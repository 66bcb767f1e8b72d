"""Oscillating part of the Li sequence.

The quantity of interest is the binomial transform

    lambda_tilde_n = - sum_{j=1}^{n} C(n, j) * eta_{j-1}

— the oscillation that remains after subtracting the smooth trend
(1 + n log n)/2 + c n, with c = (gamma_0 - 1 - log(2 pi)) / 2, from the
Li sequence.  Whether this oscillation stays bounded by the trend is a
famous open problem; this module only computes it, two independent ways:

* ``lambda_tilde_binomial`` — the transform above, evaluated with exact
  integer binomials.  The sum cancels catastrophically (roughly n bits
  are lost), so it runs under a guard policy of max(64, 10 n) extra bits
  and re-checks itself at 64 more ("cancellation sentinel") rather than
  ever returning silently wrong digits.
* ``lambda_tilde_explicit`` — the direct partition sum over the
  Stieltjes constants,

    lambda_tilde_n = - sum_{1<=r<=n} sum_{r(k)=r}
                         (p-1)! C(n, r) r prod_i (-gamma_i)^(k_i) / k_i!

  (vectors with r > n would carry a zero binomial factor, so the
  enumeration simply stops at r = n).

``term_distribution`` exposes the individual partition-sum terms — one
value per vector, sum_{m<=n} p(m) of them — whose near-symmetric pileup
around zero is what makes the oscillation so much smaller than its
largest terms; ``histogram`` bins them for plotting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import mpmath as mp

from .coefficients import (
    EtaTable,
    SymbolicExpansion,
    eta_from_gamma_recurrence,
    modified_gamma,
    partition_product,
)
from .errors import PrecisionInfeasibleError
from .numerics import DEFAULT_CONTEXT, BigReal, PrecisionContext
from .partitions import enumerate_constrained
from .stieltjes import CONVENTION_PAPER, GammaTable, compute_gamma_table

__all__ = [
    "LambdaRecord",
    "TermDistribution",
    "lambda_guard_bits",
    "lambda_context",
    "lambda_tilde_binomial",
    "lambda_tilde_explicit",
    "expand_lambda_symbolic",
    "trend_constant",
    "lambda_trend",
    "term_distribution",
    "histogram",
    "lambda_estimate",
]

METHOD_BINOMIAL = "binomial"
METHOD_EXPLICIT = "explicit"


@dataclass(frozen=True)
class LambdaRecord:
    """Oscillation, trend, and their sum for one index.

    ``estimate`` is trend + lambda_tilde computed exactly (no rounding in
    the addition); since the trend is only asymptotic, the estimate is an
    asymptotic stand-in for the underlying Li number, not its value.
    """

    n: int
    lambda_tilde: BigReal
    trend: BigReal
    estimate: BigReal
    method: str


@dataclass(frozen=True)
class TermDistribution:
    """All nonzero partition-sum terms for one index, canonical order.

    The negated sum of ``term_values`` equals lambda_tilde_n.
    """

    n: int
    term_values: tuple[BigReal, ...]

    def __len__(self) -> int:
        return len(self.term_values)


def lambda_guard_bits(n: int) -> int:
    """Guard policy for oscillation work at index n: the binomial sum
    loses on the order of n bits to cancellation."""
    return max(64, 10 * n)


def lambda_context(target_bits: int, n: int) -> PrecisionContext:
    """Context with the oscillation guard policy applied for index n."""
    return PrecisionContext(target_bits, lambda_guard_bits(n))


def _require_paper(g: GammaTable):
    if g.convention != CONVENTION_PAPER:
        raise ValueError(
            f"need a {CONVENTION_PAPER!r}-convention table, got {g.convention!r}")


def _binomial_sum(values, n: int, bits: int) -> BigReal:
    with mp.workprec(bits):
        acc = mp.mpf(0)
        for j in range(1, n + 1):
            acc += math.comb(n, j) * values[j - 1]
        return -acc


def lambda_tilde_binomial(e: EtaTable, n: int,
                          ctx: PrecisionContext = DEFAULT_CONTEXT, *,
                          check_cancellation: bool = True) -> BigReal:
    """lambda_tilde_n = - sum_{j=1}^{n} C(n, j) eta_{j-1}.

    Binomials are exact integers; the eta values come from the table
    as-is.  With ``check_cancellation`` on (the default), the sum is
    recomputed at 64 extra guard bits, and a drift of 2^-target_bits or
    more raises PrecisionInfeasibleError: digits that move under extra
    guard were never trustworthy.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if e.n_max < n - 1:
        raise ValueError(
            f"eta table too short: need index {n - 1}, have {e.n_max}")
    value = _binomial_sum(e.values, n, ctx.working_bits)
    if check_cancellation:
        recheck = _binomial_sum(e.values, n, ctx.working_bits + 64)
        with ctx.workprec():
            if abs(value - recheck) >= mp.mpf(2) ** -ctx.target_bits:
                raise PrecisionInfeasibleError(
                    f"binomial sum for n={n} is not stable at "
                    f"{ctx.working_bits} working bits (cancellation); "
                    f"raise guard_bits — policy suggests {lambda_guard_bits(n)}")
    return value


def _term_values(g: GammaTable, n: int) -> Iterator[BigReal]:
    # one value per vector, r ascending then lexicographic: the canonical
    # order shared with the symbolic expansion
    for r in range(1, n + 1):
        c_nr = math.comb(n, r)
        for vec in enumerate_constrained(r):
            weight = modified_gamma(vec.p) * c_nr * r
            yield weight * partition_product(g.values, vec)


def lambda_tilde_explicit(g: GammaTable, n: int,
                          ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """The oscillation by direct partition sum over the Stieltjes
    constants; needs only gamma_0 .. gamma_{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    _require_paper(g)
    if g.n_max < n - 1:
        raise ValueError(
            f"gamma table too short: need index {n - 1}, have {g.n_max}")
    with ctx.workprec():
        total = mp.mpf(0)
        for t in _term_values(g, n):
            total += t
        return -total


def term_distribution(g: GammaTable, n: int,
                      ctx: PrecisionContext = DEFAULT_CONTEXT) -> TermDistribution:
    """Every nonzero partition-sum term for index n, in canonical order.

    The length is sum_{m<=n} p(m) and the negated sum equals
    lambda_tilde_n at working precision.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _require_paper(g)
    if g.n_max < n - 1:
        raise ValueError(
            f"gamma table too short: need index {n - 1}, have {g.n_max}")
    with ctx.workprec():
        return TermDistribution(n, tuple(_term_values(g, n)))


def expand_lambda_symbolic(n: int) -> SymbolicExpansion:
    """lambda_tilde_n as an exact polynomial in gamma_0 .. gamma_{n-1}.

    Exponent vectors are padded to length n + 1 so all monomials share
    one key shape; the coefficient of the monomial with multiplicities k
    (partitioning r) is the integer (-1)^(p+1) (p-1)! C(n, r) r / prod k_i!.
    Term count: sum_{m<=n} p(m).
    """
    if n < 1:
        raise ValueError("n must be positive")
    terms: dict[tuple[int, ...], Fraction] = {}
    for r in range(1, n + 1):
        c_nr = math.comb(n, r)
        for vec in enumerate_constrained(r):
            denom = 1
            for m in vec.k:
                if m > 1:
                    denom *= math.factorial(m)
            coeff = Fraction(modified_gamma(vec.p) * c_nr * r, denom)
            if vec.p % 2 == 0:
                coeff = -coeff
            key = vec.k + (0,) * (n - r)
            terms[key] = coeff
    return SymbolicExpansion("lambda_tilde", n, terms)


# --------------------------------------------------------------------------
# Trend
# --------------------------------------------------------------------------

_gamma0_cache: dict[tuple[int, int], BigReal] = {}


def trend_constant(ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """c = (gamma_0 - 1 - log(2 pi)) / 2, about -1.1303307."""
    key = (ctx.target_bits, ctx.guard_bits)
    gamma0 = _gamma0_cache.get(key)
    if gamma0 is None:
        gamma0 = compute_gamma_table(0, ctx).values[0]
        _gamma0_cache[key] = gamma0
    with ctx.workprec():
        return (gamma0 - 1 - mp.log(2 * mp.pi)) / 2


def lambda_trend(n: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Asymptotic trend (1 + n log n)/2 + c n of the smooth part."""
    if n < 1:
        raise ValueError("n must be positive")
    c = trend_constant(ctx)
    with ctx.workprec():
        return (1 + n * mp.log(n)) / 2 + c * n


# --------------------------------------------------------------------------
# Distribution views
# --------------------------------------------------------------------------


def histogram(d: TermDistribution, bins: int,
              ctx: PrecisionContext = DEFAULT_CONTEXT) -> list[tuple[BigReal, BigReal, int]]:
    """Equal-width binning of the term values over [min, max].

    Deterministic tie rule: a value sitting on a bin boundary counts in
    the upper bin, and the maximum counts in the last bin (if all values
    coincide, everything lands there).  Returns (lower, upper, count)
    rows whose counts sum to len(d).
    """
    if bins < 1:
        raise ValueError("bins must be positive")
    vals = d.term_values
    if not vals:
        raise ValueError("empty distribution")
    with ctx.workprec():
        lo = min(vals)
        hi = max(vals)
        width = (hi - lo) / bins
        counts = [0] * bins
        for v in vals:
            if width == 0:
                idx = bins - 1
            else:
                idx = min(int(mp.floor((v - lo) / width)), bins - 1)
            counts[idx] += 1
        rows = []
        for i in range(bins):
            lower = lo + i * width
            upper = hi if i == bins - 1 else lo + (i + 1) * width
            rows.append((lower, upper, counts[i]))
    return rows


def lambda_estimate(g: GammaTable, n: int,
                    ctx: PrecisionContext = DEFAULT_CONTEXT,
                    method: str = METHOD_BINOMIAL) -> LambdaRecord:
    """Bundle oscillation, trend, and their exact sum for one index.

    ``method`` picks the oscillation route; "binomial" derives the eta
    table from ``g`` by the recurrence first.
    """
    if method == METHOD_BINOMIAL:
        eta = eta_from_gamma_recurrence(g, n - 1, ctx)
        osc = lambda_tilde_binomial(eta, n, ctx)
    elif method == METHOD_EXPLICIT:
        osc = lambda_tilde_explicit(g, n, ctx)
    else:
        raise ValueError(f"unknown method {method!r}")
    trend = lambda_trend(n, ctx)
    estimate = mp.fadd(trend, osc, exact=True)
    return LambdaRecord(n=n, lambda_tilde=osc, trend=trend,
                        estimate=estimate, method=method)
