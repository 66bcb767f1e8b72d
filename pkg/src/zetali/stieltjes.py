"""Stieltjes-constant tables.

The values tabulated here are the coefficients gamma_n of the regular
part of the Laurent expansion of the Riemann zeta function about its
pole, in the normalization

    zeta(1 + s) = 1/s + sum_{n>=0} gamma_n s^n            (tag "paper")

The other common normalization factors out (-1)^n / n!:

    gamma_classic[n] = (-1)^n * n! * gamma[n]             (tag "classic")

``compute_gamma_table`` is the production route.  It expands the
truncated Dirichlet sum plus Euler-Maclaurin tail of zeta(1+s) as a
power series in s and reads the coefficients off after removing the
1/s pole:

    zeta(1+s) = sum_{k=1}^{M-1} k^(-1-s)
              + M^(-s)/s  +  M^(-1-s)/2
              + sum_{j=1}^{J} B_2j/(2j)! * (1+s)(2+s)...(2j-1+s) * M^(-s-2j)
              + R_J

Every summand is elementary as a series in s (each k^(-1-s) is
(1/k) exp(-s log k); the rising-factorial polynomials have exact integer
coefficients), and the first omitted tail term bounds the truncation
error, so the cutoff M and tail order J are chosen adaptively until
that bound drops below 2^-(target_bits + 8) for every retained
coefficient.  The construction is self-verifying: doubling M, J or the
guard bits must not change any digit above 2^-target_bits.

``gamma_limit_definition`` is the direct truncation of the defining
limit.  It converges like log(x)^n / x and is kept only as an
independent slow sanity check on the table builder.
"""

from __future__ import annotations

import json
import math
import threading
from dataclasses import dataclass
from pathlib import Path

import mpmath as mp

from .errors import PrecisionInfeasibleError, TableFormatError
from .numerics import (
    DEFAULT_CONTEXT,
    BigReal,
    PrecisionContext,
    bernoulli,
    from_decimal,
    to_decimal,
)

__all__ = [
    "CONVENTION_PAPER",
    "CONVENTION_CLASSIC",
    "GammaTable",
    "compute_gamma_table",
    "euler_maclaurin_parameters",
    "gamma_limit_definition",
    "convert_convention",
    "render_table",
    "save_table",
    "load_table",
]

CONVENTION_PAPER = "paper"
CONVENTION_CLASSIC = "classic"
_CONVENTIONS = (CONVENTION_PAPER, CONVENTION_CLASSIC)


@dataclass(frozen=True)
class GammaTable:
    """Immutable table of Stieltjes constants gamma_0 .. gamma_n_max.

    ``precision_bits`` records the working precision the values carry.
    """

    convention: str
    n_max: int
    values: tuple[BigReal, ...]
    precision_bits: int

    def __post_init__(self):
        if self.convention not in _CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.n_max + 1:
            raise ValueError(
                f"expected {self.n_max + 1} values, got {len(self.values)}")
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")

    def __getitem__(self, n: int) -> BigReal:
        return self.values[n]

    def __len__(self) -> int:
        return self.n_max + 1


# --------------------------------------------------------------------------
# Euler-Maclaurin extraction
# --------------------------------------------------------------------------

_poch_lock = threading.Lock()
_poch_polys: list[list[int]] = [[1, 1]]  # j=1: (s + 1)


def _pochhammer_poly(j: int) -> list[int]:
    """Integer coefficients (ascending powers) of prod_{i=1}^{2j-1} (s+i)."""
    with _poch_lock:
        while len(_poch_polys) < j:
            poly = _poch_polys[-1]
            jj = len(_poch_polys) + 1
            for root in (2 * jj - 2, 2 * jj - 1):
                grown = [0] * (len(poly) + 1)
                for i, a in enumerate(poly):
                    grown[i] += a * root
                    grown[i + 1] += a
                poly = grown
            _poch_polys.append(poly)
        return _poch_polys[j - 1]


def euler_maclaurin_parameters(n_max: int, ctx: PrecisionContext = DEFAULT_CONTEXT,
                               cutoff: int | None = None) -> tuple[int, int]:
    """Choose the Dirichlet cutoff M and tail order J for a table build.

    J is the smallest tail order whose first omitted term contributes
    less than 2^-(target_bits + 8) to every coefficient up to ``n_max``
    (all parts of the term bounded in absolute value); if no such J
    exists at the current M, M is doubled.  Passing ``cutoff`` pins M
    (used by the self-verification tests); if the bound is unreachable
    there, PrecisionInfeasibleError is raised.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    target = ctx.target_bits
    with ctx.workprec():
        eps = mp.mpf(2) ** -(target + 8)
        m_cut = cutoff if cutoff is not None else max(
            16, 2 * n_max, (35 * (target + 8)) // 100)
        while True:
            ln_m = mp.log(m_cut)
            # |(-ln M)^t / t!| for the exp-series factor
            expc = [ln_m ** t / mp.factorial(t) for t in range(n_max + 1)]
            prev = None
            for j in range(1, 8 * m_cut + 8):
                poly = _pochhammer_poly(j)
                b = bernoulli(2 * j)
                pref = (mp.mpf(abs(b.numerator)) / b.denominator
                        / mp.factorial(2 * j) * mp.mpf(m_cut) ** (-2 * j))
                worst = mp.mpf(0)
                for n in range(n_max + 1):
                    acc = mp.mpf(0)
                    for m in range(min(n, len(poly) - 1) + 1):
                        acc += poly[m] * expc[n - m]
                    if acc > worst:
                        worst = acc
                bound = pref * worst
                if bound < eps:
                    return m_cut, j - 1
                if prev is not None and bound > prev and j > 2:
                    break  # asymptotic terms started growing; M too small
                prev = bound
            if cutoff is not None:
                raise PrecisionInfeasibleError(
                    f"no tail order reaches 2^-{target + 8} at cutoff {m_cut}")
            m_cut *= 2


def compute_gamma_table(n_max: int, ctx: PrecisionContext = DEFAULT_CONTEXT, *,
                        cutoff: int | None = None,
                        tail_terms: int | None = None) -> GammaTable:
    """Build the table gamma_0 .. gamma_n_max (convention "paper").

    Truncation error is below 2^-(target_bits + 8) per coefficient by
    construction; rounding stays well under that thanks to the guard
    bits.  ``cutoff`` and ``tail_terms`` override the adaptive M and J
    for stability self-tests.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    m_cut, tail = euler_maclaurin_parameters(n_max, ctx, cutoff=cutoff)
    if tail_terms is not None:
        tail = tail_terms
    # rounding headroom: the coefficient sums accumulate one rounding per
    # term; demand enough guard that this noise sits below the truncation
    # target as well
    needed = ctx.target_bits + 8 + max(16, (m_cut + 2 * tail + n_max).bit_length() + 4)
    if ctx.working_bits < needed:
        raise PrecisionInfeasibleError(
            f"working precision {ctx.working_bits} bits cannot separate "
            f"truncation from rounding here; need at least {needed} bits "
            f"(raise guard_bits)")
    with ctx.workprec():
        ln_m = mp.log(m_cut)
        inv_fact = [mp.mpf(1) / mp.factorial(t) for t in range(n_max + 2)]
        coef = [mp.mpf(0) for _ in range(n_max + 1)]
        coef[0] = mp.mpf(1)  # k = 1 term of the Dirichlet sum
        for k in range(2, m_cut):
            neg_lnk = -mp.log(k)
            power = mp.mpf(1) / k
            for n in range(n_max + 1):
                coef[n] += power * inv_fact[n]
                power *= neg_lnk
        # M^(-s)/s with the 1/s pole removed: coefficient of s^n is
        # (-ln M)^(n+1) / (n+1)!
        power = -ln_m
        for n in range(n_max + 1):
            coef[n] += power * inv_fact[n + 1]
            power *= -ln_m
        # M^(-1-s)/2
        power = mp.mpf(1) / (2 * m_cut)
        for n in range(n_max + 1):
            coef[n] += power * inv_fact[n]
            power *= -ln_m
        # Euler-Maclaurin tail
        expc = [(-ln_m) ** t * inv_fact[t] for t in range(n_max + 1)]
        for j in range(1, tail + 1):
            poly = _pochhammer_poly(j)
            b = bernoulli(2 * j)
            pref = (mp.mpf(b.numerator) / b.denominator
                    / mp.factorial(2 * j) * mp.mpf(m_cut) ** (-2 * j))
            for n in range(n_max + 1):
                acc = mp.mpf(0)
                for m in range(min(n, len(poly) - 1) + 1):
                    acc += poly[m] * expc[n - m]
                coef[n] += pref * acc
    return GammaTable(CONVENTION_PAPER, n_max, tuple(coef), ctx.working_bits)


def gamma_limit_definition(n: int, x_max: int,
                           ctx: PrecisionContext = DEFAULT_CONTEXT) -> BigReal:
    """Finite truncation of the defining limit

        (-1)^n / n! * ( sum_{k<=x} log(k)^n / k - log(x)^(n+1) / (n+1) ).

    Error decays like O(log(x)^n / x) — a slow sanity check on the
    table builder only, never a production route.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if x_max < 2:
        raise ValueError("x_max must be at least 2")
    with ctx.workprec():
        total = mp.mpf(0)
        if n == 0:
            for k in range(1, x_max + 1):
                total += mp.mpf(1) / k
        else:
            for k in range(2, x_max + 1):
                total += mp.log(k) ** n / k
        total -= mp.log(x_max) ** (n + 1) / (n + 1)
        if n % 2:
            total = -total
        return total / mp.factorial(n)


# --------------------------------------------------------------------------
# Convention conversion
# --------------------------------------------------------------------------


def _exact_int_scale(x: BigReal, factor: int) -> BigReal:
    # x * factor with no rounding: allow the mantissa to grow
    # (mpmath rounds every operation, negation included, to the ambient
    # precision, so the signed multiply must happen inside the block)
    bits = max(x.man.bit_length() + factor.bit_length() + 4, 8)
    with mp.workprec(bits):
        return x * factor


def convert_convention(table: GammaTable, target: str) -> GammaTable:
    """Re-normalize a table between the "paper" and "classic" tags.

    classic[n] = (-1)^n * n! * paper[n].  Multiplying by n! is performed
    exactly (mantissas may grow past the stated precision), division
    rounds once at the table's precision — so paper -> classic -> paper
    returns the original values bit for bit.
    """
    if target not in _CONVENTIONS:
        raise ValueError(f"unknown convention {target!r}")
    if table.convention == target:
        return table
    out = []
    for n, v in enumerate(table.values):
        sign = -1 if n % 2 else 1
        if target == CONVENTION_CLASSIC:
            w = _exact_int_scale(v, sign * math.factorial(n))
        else:
            with mp.workprec(table.precision_bits):
                w = v / math.factorial(n)  # one rounding
                if sign < 0:
                    w = -w  # exact: the quotient already fits the precision
        out.append(w)
    return GammaTable(target, table.n_max, tuple(out), table.precision_bits)


# --------------------------------------------------------------------------
# Table files
# --------------------------------------------------------------------------


def render_table(table: GammaTable, fmt: str = "json") -> str:
    """Serialize a table to its JSON or CSV file format.

    JSON: ``{"convention", "precision_bits", "n_max", "values"}`` with
    values as decimal strings.  CSV: ``# key=value`` metadata comments,
    a ``n,value`` header, one row per index.  Both forms are exact
    inverses of :func:`load_table` up to 1 ulp at the stated precision.
    """
    values = [to_decimal(v, table.precision_bits) for v in table.values]
    if fmt == "json":
        obj = {
            "convention": table.convention,
            "precision_bits": table.precision_bits,
            "n_max": table.n_max,
            "values": values,
        }
        return json.dumps(obj, indent=2) + "\n"
    if fmt == "csv":
        lines = [
            f"# convention={table.convention}",
            f"# precision_bits={table.precision_bits}",
            "n,value",
        ]
        lines.extend(f"{n},{v}" for n, v in enumerate(values))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def save_table(table: GammaTable, path) -> None:
    """Write a table file; a ``.csv`` suffix selects CSV, anything else JSON."""
    fmt = "csv" if str(path).endswith(".csv") else "json"
    Path(path).write_text(render_table(table, fmt), encoding="utf-8")


def _table_from_parts(convention, precision_bits, n_max, raw_values) -> GammaTable:
    if convention not in _CONVENTIONS:
        raise TableFormatError(f"unknown convention tag {convention!r}")
    try:
        precision_bits = int(precision_bits)
        n_max = int(n_max)
    except (TypeError, ValueError) as exc:
        raise TableFormatError(f"bad table metadata: {exc}") from exc
    if precision_bits < 1 or n_max < 0:
        raise TableFormatError("precision_bits/n_max out of range")
    if len(raw_values) != n_max + 1:
        raise TableFormatError(
            f"entry count mismatch: n_max={n_max} but {len(raw_values)} values")
    try:
        values = tuple(from_decimal(v, precision_bits) for v in raw_values)
    except (ValueError, TypeError) as exc:
        raise TableFormatError(f"bad value string: {exc}") from exc
    return GammaTable(convention, n_max, values, precision_bits)


def load_table(path) -> GammaTable:
    """Read a table file written by :func:`save_table` (format sniffed
    from the content, so extensions do not matter on input)."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"not valid JSON: {exc}") from exc
        missing = {"convention", "precision_bits", "n_max", "values"} - obj.keys()
        if missing:
            raise TableFormatError(f"missing keys: {sorted(missing)}")
        if not isinstance(obj["values"], list):
            raise TableFormatError("values must be a list")
        return _table_from_parts(obj["convention"], obj["precision_bits"],
                                 obj["n_max"], obj["values"])
    # CSV
    meta = {}
    rows = []
    header_seen = False
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition("=")
            if sep:
                meta[key.strip()] = value.strip()
            continue
        if not header_seen:
            if line != "n,value":
                raise TableFormatError(f"expected 'n,value' header, got {line!r}")
            header_seen = True
            continue
        idx, sep, value = line.partition(",")
        if not sep:
            raise TableFormatError(f"bad row {line!r}")
        rows.append((idx, value))
    if not header_seen:
        raise TableFormatError("no 'n,value' header found")
    if "convention" not in meta or "precision_bits" not in meta:
        raise TableFormatError("missing '# convention=' or '# precision_bits=' comment")
    for want, (idx, _) in enumerate(rows):
        try:
            got = int(idx)
        except ValueError as exc:
            raise TableFormatError(f"bad index {idx!r}") from exc
        if got != want:
            raise TableFormatError(f"rows out of order: expected {want}, got {got}")
    return _table_from_parts(meta["convention"], meta["precision_bits"],
                             len(rows) - 1, [v for _, v in rows])
