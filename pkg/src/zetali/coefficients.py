"""Maps between the Stieltjes constants and the eta coefficients.

The eta coefficients are the Laurent coefficients of the negated
logarithmic derivative of zeta about its pole:

    -zeta'/zeta(1 + s) = 1/s + sum_{n>=0} eta_n s^n

Writing zeta(1+s) = A(s)/s with A(s) = 1 + sum gamma_n s^(n+1) ties the
two families together, and this module computes eta four independent
ways plus the inverse map:

* ``eta_from_gamma_recurrence`` — eta_n = -(n+1) gamma_n
  - sum_{k<n} eta_k gamma_{n-k-1}; the cheap production route.
* ``eta_from_gamma_explicit`` — the closed partition sum
  eta_{n-1} = n * sum_{r(k)=n} (p-1)! prod_i (-gamma_i)^{k_i} / k_i!.
* ``eta_series_oracle`` — coefficients of -A'(s)/A(s) computed with
  truncated-series arithmetic; independent of both formulas above.
* ``eta_limit_definition`` — the slowly convergent prime-power limit
  (von Mangoldt weights); sanity checking only.
* ``gamma_from_eta_explicit`` — the inverse partition sum
  gamma_{n-1} = sum_{r(k)=n} prod_i (1/k_i!) (-eta_i/(1+i))^{k_i}.

``expand_eta_symbolic`` / ``expand_gamma_symbolic`` evaluate the two
partition sums with symbolic inputs, giving exact rational coefficients
per monomial; these pin down the algebra without any floating point.

In the partition sums, the integer weight (p-1)! is the "modified
gamma": Gamma(p) for p >= 1 with Gamma(0) taken as 1.  Every vector
with r = n >= 1 has p >= 1, so the p = 0 case only makes the n = 0 edge
total; it is never reached in production paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath as mp

from .numerics import (
    DEFAULT_CONTEXT,
    BigRational,
    BigReal,
    PowerSeries,
    PrecisionContext,
    rational_to_str,
    series_derivative,
    series_mul,
    series_recip,
)
from .partitions import MultiplicityVector, enumerate_constrained
from .stieltjes import CONVENTION_PAPER, GammaTable

__all__ = [
    "PROVENANCE_RECURRENCE",
    "PROVENANCE_EXPLICIT",
    "PROVENANCE_SERIES_ORACLE",
    "PROVENANCE_LIMIT_DEFINITION",
    "EtaTable",
    "SymbolicExpansion",
    "modified_gamma",
    "partition_product",
    "eta_from_gamma_recurrence",
    "eta_from_gamma_explicit",
    "gamma_from_eta_explicit",
    "eta_series_oracle",
    "von_mangoldt",
    "prime_power_base",
    "eta_limit_definition",
    "expand_eta_symbolic",
    "expand_gamma_symbolic",
]

PROVENANCE_RECURRENCE = "recurrence"
PROVENANCE_EXPLICIT = "explicit"
PROVENANCE_SERIES_ORACLE = "series_oracle"
PROVENANCE_LIMIT_DEFINITION = "limit_definition"
_PROVENANCES = (PROVENANCE_RECURRENCE, PROVENANCE_EXPLICIT,
                PROVENANCE_SERIES_ORACLE, PROVENANCE_LIMIT_DEFINITION)


@dataclass(frozen=True)
class EtaTable:
    """Immutable table of eta_0 .. eta_n_max with the route that built it."""

    n_max: int
    values: tuple[BigReal, ...]
    precision_bits: int
    provenance: str

    def __post_init__(self):
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.n_max + 1:
            raise ValueError(
                f"expected {self.n_max + 1} values, got {len(self.values)}")
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")
        if self.provenance not in _PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def __getitem__(self, n: int) -> BigReal:
        return self.values[n]

    def __len__(self) -> int:
        return self.n_max + 1


def modified_gamma(p: int) -> int:
    """Integer Gamma(p) = (p-1)! with the p = 0 edge defined as 1."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return 1 if p == 0 else math.factorial(p - 1)


def _require_paper(g: GammaTable):
    if g.convention != CONVENTION_PAPER:
        raise ValueError(
            f"need a {CONVENTION_PAPER!r}-convention table, got {g.convention!r}")


def _require_length(table, n_needed: int, what: str):
    if table.n_max < n_needed:
        raise ValueError(
            f"{what} table too short: need index {n_needed}, have {table.n_max}")


def partition_product(values, vec: MultiplicityVector) -> BigReal:
    """prod_i (-values[i])^(k_i) / k_i! over the nonzero multiplicities.

    Must be called under the working precision of the caller's context.
    """
    acc = mp.mpf(1)
    for i, m in enumerate(vec.k):
        if m:
            acc *= (-values[i]) ** m / math.factorial(m)
    return acc


def eta_from_gamma_recurrence(g: GammaTable, n_max: int,
                              ctx: PrecisionContext = DEFAULT_CONTEXT) -> EtaTable:
    """eta_n = -(n+1) gamma_n - sum_{k=0}^{n-1} eta_k gamma_{n-k-1}."""
    _require_paper(g)
    _require_length(g, n_max, "gamma")
    with ctx.workprec():
        out: list[BigReal] = []
        for n in range(n_max + 1):
            acc = mp.mpf(0)
            for k in range(n):
                acc += out[k] * g.values[n - k - 1]
            out.append(-(n + 1) * g.values[n] - acc)
    return EtaTable(n_max, tuple(out), ctx.working_bits, PROVENANCE_RECURRENCE)


def eta_from_gamma_explicit(g: GammaTable, n: int,
                            ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """eta_{n-1} by the closed partition sum

        eta_{n-1} = n * sum_{r(k)=n} (p-1)! prod_i (-gamma_i)^(k_i) / k_i!

    summed in canonical enumeration order for reproducibility.
    """
    if n < 1:
        raise ValueError("n must be positive")
    _require_paper(g)
    _require_length(g, n - 1, "gamma")
    with ctx.workprec():
        total = mp.mpf(0)
        for vec in enumerate_constrained(n):
            total += (n * modified_gamma(vec.p)) * partition_product(g.values, vec)
        return total


def gamma_from_eta_explicit(e: EtaTable, n: int,
                            ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """gamma_{n-1} by inverting the partition sum:

        gamma_{n-1} = sum_{r(k)=n} prod_i (1/k_i!) (-eta_i / (1+i))^(k_i)
    """
    if n < 1:
        raise ValueError("n must be positive")
    _require_length(e, n - 1, "eta")
    with ctx.workprec():
        scaled = [e.values[i] / (1 + i) for i in range(n)]
        total = mp.mpf(0)
        for vec in enumerate_constrained(n):
            total += partition_product(scaled, vec)
        return total


def eta_series_oracle(g: GammaTable, n_max: Optional[int] = None,
                      ctx: PrecisionContext = DEFAULT_CONTEXT) -> EtaTable:
    """eta_0 .. eta_n_max as the coefficients of -A'(s)/A(s) where
    A(s) = 1 + sum gamma_n s^(n+1).

    Built entirely from truncated-series arithmetic, so it shares no
    code path with the recurrence or the partition sum.
    """
    _require_paper(g)
    if n_max is None:
        n_max = g.n_max
    _require_length(g, n_max, "gamma")
    order = n_max + 1
    a = PowerSeries([1] + [g.values[i] for i in range(order)], ctx)
    da = series_derivative(a, ctx)                      # order n_max
    inv = series_recip(a, ctx)                          # order n_max + 1
    inv_cut = PowerSeries(inv.coefficients[:order], ctx)
    quot = series_mul(da, inv_cut, ctx)
    with ctx.workprec():
        values = tuple(-c for c in quot.coefficients)
    return EtaTable(n_max, values, ctx.working_bits, PROVENANCE_SERIES_ORACLE)


# --------------------------------------------------------------------------
# von Mangoldt weights and the direct limit
# --------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin; these fixed bases are exact for n < 3.3e24
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _integer_nth_root(x: int, m: int) -> int:
    if m == 1:
        return x
    if m == 2:
        return math.isqrt(x)
    r = round(x ** (1.0 / m))
    while r > 1 and r ** m > x:
        r -= 1
    while (r + 1) ** m <= x:
        r += 1
    return r


def prime_power_base(k: int) -> Optional[int]:
    """The prime p with k = p^m, or None when k is not a prime power.

    Decided exactly: integer m-th roots for every m up to log2(k), then a
    deterministic primality test on the root.
    """
    if k < 2:
        return None
    for m in range(1, k.bit_length()):
        r = _integer_nth_root(k, m)
        if r ** m == k and _is_prime(r):
            return r
    return None


def von_mangoldt(k: int, ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Lambda(k): log p when k = p^m for a prime p, else exact zero."""
    if k < 1:
        raise ValueError("k must be positive")
    base = prime_power_base(k)
    with ctx.workprec():
        return mp.log(base) if base else mp.mpf(0)


def _primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p:: p] = b"\x00" * len(range(p * p, n + 1, p))
    return [i for i, flag in enumerate(sieve) if flag]


def eta_limit_definition(n: int, x_max: int,
                         ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Finite truncation of the defining limit

        (-1)^n / n! * ( sum_{k<=x} Lambda(k) log(k)^n / k
                        - log(x)^(n+1) / (n+1) ).

    The weighted sum runs over prime powers via a sieve (log(p^e) reuses
    e * log p, so one logarithm per prime).  Convergence is very slow —
    a sanity check only.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x_max < 2:
        raise ValueError("x_max must be at least 2")
    primes = _primes_up_to(x_max)
    with ctx.workprec():
        total = mp.mpf(0)
        for p in primes:
            lp = mp.log(p)
            q, e = p, 1
            while q <= x_max:
                if n == 0:
                    total += lp / q
                else:
                    total += lp * (e * lp) ** n / q
                q *= p
                e += 1
        total -= mp.log(x_max) ** (n + 1) / (n + 1)
        if n % 2:
            total = -total
        return total / mp.factorial(n)


# --------------------------------------------------------------------------
# Exact symbolic expansions
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SymbolicExpansion:
    """One coefficient expanded exactly as a polynomial in lower-level
    coefficients.

    ``terms`` maps a monomial's exponent vector (k_0, ..., k_n) to its
    exact rational coefficient, in canonical enumeration order.
    """

    target: str  # "eta" | "gamma" | "lambda_tilde"
    n: int
    terms: dict[tuple[int, ...], BigRational]

    def to_json_obj(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "terms": [
                {"k": list(k), "coeff": rational_to_str(c)}
                for k, c in self.terms.items()
            ],
        }


def expand_eta_symbolic(n: int) -> SymbolicExpansion:
    """eta_{n-1} as an exact polynomial in gamma_0 .. gamma_{n-1}.

    The coefficient of the monomial with multiplicities k is the integer
    (-1)^p * n * (p-1)! / prod k_i!; the term count is p(n) and every
    sign is (-1)^p.
    """
    if n < 1:
        raise ValueError("n must be positive")
    terms: dict[tuple[int, ...], Fraction] = {}
    for vec in enumerate_constrained(n):
        denom = 1
        for m in vec.k:
            if m > 1:
                denom *= math.factorial(m)
        coeff = Fraction(n * modified_gamma(vec.p), denom)
        if vec.p % 2:
            coeff = -coeff
        terms[vec.k] = coeff
    return SymbolicExpansion("eta", n, terms)


def expand_gamma_symbolic(n: int) -> SymbolicExpansion:
    """gamma_{n-1} as an exact polynomial in eta_0 .. eta_{n-1};
    coefficients are prod_i (1/k_i!) (-1/(1+i))^(k_i), and n! times any
    of them is an integer."""
    if n < 1:
        raise ValueError("n must be positive")
    terms: dict[tuple[int, ...], Fraction] = {}
    for vec in enumerate_constrained(n):
        coeff = Fraction(1)
        for i, m in enumerate(vec.k):
            if m:
                coeff *= Fraction((-1) ** m, math.factorial(m) * (1 + i) ** m)
        terms[vec.k] = coeff
    return SymbolicExpansion("gamma", n, terms)
