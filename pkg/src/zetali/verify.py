"""Cross-method verification suite.

Every quantity in this package is computable by at least two independent
routes; this module recomputes each one every way and reports the worst
observed discrepancy next to its tolerance, as data (the CLI renders it
one machine-readable line per check).  A check passes iff its
discrepancy is strictly below its threshold.

The low-order expansions are also pinned against exact integer/rational
fixtures (the classical first lines of the eta, gamma and oscillation
expansions), so a sign or weight regression cannot hide inside a
floating-point tolerance.

The whole suite is deterministic: fixed evaluation order, fixed
precision contexts derived from ``target_bits``, no randomness — two
runs produce identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .coefficients import (
    eta_from_gamma_explicit,
    eta_from_gamma_recurrence,
    eta_series_oracle,
    expand_eta_symbolic,
    expand_gamma_symbolic,
    gamma_from_eta_explicit,
)
from .li import (
    expand_lambda_symbolic,
    histogram,
    lambda_context,
    lambda_tilde_binomial,
    lambda_tilde_explicit,
    term_distribution,
)
from .numerics import PrecisionContext, to_decimal
from .partitions import enumerate_constrained, partition_count, summatory_partition_count
from .stieltjes import compute_gamma_table, euler_maclaurin_parameters

__all__ = ["CheckResult", "run_verification", "ETA_FIXTURES",
           "GAMMA_FIXTURES", "LAMBDA_FIXTURES"]

F = Fraction

# Known low-order expansions, exact.  Keys are exponent vectors in
# canonical order; eta/lambda coefficients are integers, gamma rationals.
ETA_FIXTURES = {
    1: {(1, 0): F(-1)},
    2: {(0, 1, 0): F(-2), (2, 0, 0): F(1)},
    3: {(0, 0, 1, 0): F(-3), (1, 1, 0, 0): F(3), (3, 0, 0, 0): F(-1)},
    4: {(0, 0, 0, 1, 0): F(-4), (0, 2, 0, 0, 0): F(2), (1, 0, 1, 0, 0): F(4),
        (2, 1, 0, 0, 0): F(-4), (4, 0, 0, 0, 0): F(1)},
    5: {(0, 0, 0, 0, 1, 0): F(-5), (0, 1, 1, 0, 0, 0): F(5),
        (1, 0, 0, 1, 0, 0): F(5), (1, 2, 0, 0, 0, 0): F(-5),
        (2, 0, 1, 0, 0, 0): F(-5), (3, 1, 0, 0, 0, 0): F(5),
        (5, 0, 0, 0, 0, 0): F(-1)},
}

GAMMA_FIXTURES = {
    1: {(1, 0): F(-1)},
    2: {(0, 1, 0): F(-1, 2), (2, 0, 0): F(1, 2)},
    3: {(0, 0, 1, 0): F(-1, 3), (1, 1, 0, 0): F(1, 2), (3, 0, 0, 0): F(-1, 6)},
    4: {(0, 0, 0, 1, 0): F(-1, 4), (0, 2, 0, 0, 0): F(1, 8),
        (1, 0, 1, 0, 0): F(1, 3), (2, 1, 0, 0, 0): F(-1, 4),
        (4, 0, 0, 0, 0): F(1, 24)},
    5: {(0, 0, 0, 0, 1, 0): F(-1, 5), (0, 1, 1, 0, 0, 0): F(1, 6),
        (1, 0, 0, 1, 0, 0): F(1, 4), (1, 2, 0, 0, 0, 0): F(-1, 8),
        (2, 0, 1, 0, 0, 0): F(-1, 6), (3, 1, 0, 0, 0, 0): F(1, 12),
        (5, 0, 0, 0, 0, 0): F(-1, 120)},
}

LAMBDA_FIXTURES = {
    1: {(1, 0): F(1)},
    2: {(1, 0, 0): F(2), (0, 1, 0): F(2), (2, 0, 0): F(-1)},
    3: {(1, 0, 0, 0): F(3), (0, 1, 0, 0): F(6), (2, 0, 0, 0): F(-3),
        (0, 0, 1, 0): F(3), (1, 1, 0, 0): F(-3), (3, 0, 0, 0): F(1)},
    4: {(1, 0, 0, 0, 0): F(4), (0, 1, 0, 0, 0): F(12), (2, 0, 0, 0, 0): F(-6),
        (0, 0, 1, 0, 0): F(12), (1, 1, 0, 0, 0): F(-12), (3, 0, 0, 0, 0): F(4),
        (0, 0, 0, 1, 0): F(4), (0, 2, 0, 0, 0): F(-2), (1, 0, 1, 0, 0): F(-4),
        (2, 1, 0, 0, 0): F(4), (4, 0, 0, 0, 0): F(-1)},
}


@dataclass(frozen=True)
class CheckResult:
    """One verification line: the check passes iff
    ``max_discrepancy < threshold`` (both decimal strings)."""

    name: str
    scope: str
    max_discrepancy: str
    threshold: str
    passed: bool


def _rel(a, b) -> mp.mpf:
    return abs(a - b) / max(1, abs(a))


def _result(name, scope, disc, threshold, bits=64) -> CheckResult:
    with mp.workprec(bits):
        if not isinstance(disc, mp.mpf):
            disc = mp.mpf(disc)
        if not isinstance(threshold, mp.mpf):
            threshold = mp.mpf(threshold)
    return CheckResult(name, scope, to_decimal(disc, bits),
                       to_decimal(threshold, bits), bool(disc < threshold))


def run_verification(n_max: int = 20, target_bits: int = 192) -> list[CheckResult]:
    """Run the full cross-method suite up to index ``n_max``.

    ``target_bits`` must be at least 128: the fixed tolerances below are
    calibrated for a 64-bit guard on top of that.  The oscillation
    cross-check uses its own per-index guard policy for the sums, on top
    of tables computed once at the strongest guard needed.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if target_bits < 128:
        raise ValueError("verification needs target_bits >= 128")
    ctx = PrecisionContext(target_bits, 64)
    work = ctx.working_bits
    checks: list[CheckResult] = []

    # -- combinatorial law ----------------------------------------------
    bad = 0
    for n in range(n_max + 1):
        if sum(1 for _ in enumerate_constrained(n)) != partition_count(n):
            bad += 1
    checks.append(_result("partition_count_law", f"n<={n_max}", bad, 1))

    # -- eta three ways ---------------------------------------------------
    gam = compute_gamma_table(n_max, ctx)
    eta = eta_from_gamma_recurrence(gam, n_max, ctx)
    eta_ser = eta_series_oracle(gam, n_max, ctx)
    tol = mp.mpf(2) ** -128
    with ctx.workprec():
        worst = mp.mpf(0)
        for n in range(n_max + 1):
            ex = eta_from_gamma_explicit(gam, n + 1, ctx)
            worst = max(worst, _rel(eta.values[n], ex))
    checks.append(_result("eta_explicit_vs_recurrence", f"n<={n_max}", worst, tol))
    with ctx.workprec():
        worst = mp.mpf(0)
        for n in range(n_max + 1):
            worst = max(worst, _rel(eta.values[n], eta_ser.values[n]))
    checks.append(_result("eta_series_vs_recurrence", f"n<={n_max}", worst, tol))

    # -- gamma -> eta -> gamma round trip --------------------------------
    with ctx.workprec():
        worst = mp.mpf(0)
        for n in range(n_max + 1):
            back = gamma_from_eta_explicit(eta, n + 1, ctx)
            worst = max(worst, _rel(gam.values[n], back))
    checks.append(_result("gamma_eta_roundtrip", f"n<={n_max}",
                          worst, mp.mpf(2) ** -100))

    # -- oscillation two ways, guard policy -------------------------------
    ctx_big = lambda_context(target_bits, n_max)
    gam_big = compute_gamma_table(max(0, n_max - 1), ctx_big)
    eta_big = eta_from_gamma_recurrence(gam_big, max(0, n_max - 1), ctx_big)
    with ctx_big.workprec():
        worst = mp.mpf(0)
        for n in range(1, n_max + 1):
            ctx_n = lambda_context(target_bits, n)
            a = lambda_tilde_binomial(eta_big, n, ctx_n)
            b = lambda_tilde_explicit(gam_big, n, ctx_n)
            worst = max(worst, _rel(a, b))
    checks.append(_result("lambda_binomial_vs_explicit", f"n<={n_max}",
                          worst, mp.mpf(2) ** -80))

    # -- table stability under parameter doubling -------------------------
    n_stab = min(n_max, 16)
    base = compute_gamma_table(n_stab, ctx)
    m_cut, _ = euler_maclaurin_parameters(n_stab, ctx)
    double_m = compute_gamma_table(n_stab, ctx, cutoff=2 * m_cut)
    double_g = compute_gamma_table(n_stab, ctx.with_extra_guard(ctx.guard_bits))
    with mp.workprec(work + ctx.guard_bits):
        worst = mp.mpf(0)
        for n in range(n_stab + 1):
            worst = max(worst, abs(base.values[n] - double_m.values[n]))
            worst = max(worst, abs(base.values[n] - double_g.values[n]))
    checks.append(_result("gamma_table_stability", f"n<={n_stab}",
                          worst, mp.mpf(2) ** -target_bits))

    # -- exact symbolic fixtures ------------------------------------------
    bad = 0
    for n, want in ETA_FIXTURES.items():
        if expand_eta_symbolic(n).terms != want:
            bad += 1
    for n, want in GAMMA_FIXTURES.items():
        if expand_gamma_symbolic(n).terms != want:
            bad += 1
    for n, want in LAMBDA_FIXTURES.items():
        if expand_lambda_symbolic(n).terms != want:
            bad += 1
    checks.append(_result("symbolic_fixtures", "eta/gamma n<=5; lambda n<=4",
                          bad, 1))

    # -- sign and term-count laws -----------------------------------------
    n_sign = min(n_max, 25)
    bad = 0
    for n in range(1, n_sign + 1):
        exp = expand_eta_symbolic(n)
        if len(exp.terms) != partition_count(n):
            bad += 1
        for k, coeff in exp.terms.items():
            sign = -1 if sum(k) % 2 else 1
            if coeff.denominator != 1 or (coeff > 0) != (sign > 0):
                bad += 1
                break
    checks.append(_result("eta_sign_and_term_count", f"n<={n_sign}", bad, 1))

    n_cnt = min(n_max, 15)
    bad = 0
    for n in range(1, n_cnt + 1):
        if len(expand_lambda_symbolic(n).terms) != summatory_partition_count(n):
            bad += 1
    checks.append(_result("lambda_term_count", f"n<={n_cnt}", bad, 1))

    # -- term distributions: sums and zero-centered mode ------------------
    n_hi = min(n_max, 10)
    with ctx_big.workprec():
        worst = mp.mpf(0)
        tightest = None
        bad_modal = 0
        for n in range(3, n_hi + 1):
            ctx_n = lambda_context(target_bits, n)
            dist = term_distribution(gam_big, n, ctx_n)
            with ctx_n.workprec():
                total = mp.mpf(0)
                for t in dist.term_values:
                    total += t
                lam = lambda_tilde_binomial(eta_big, n, ctx_n)
                tol_n = mp.mpf(2) ** -(ctx_n.working_bits - 10 * n)
                worst = max(worst, _rel(lam, -total))
                tightest = tol_n if tightest is None else min(tightest, tol_n)
            rows = histogram(dist, 9, ctx_n)
            zero_count = None
            for lower, upper, count in rows:
                if lower <= 0 < upper:
                    zero_count = count
                    break
            if zero_count is None:  # zero at/beyond the last edge
                zero_count = rows[-1][2]
            if zero_count != max(c for _, _, c in rows):
                bad_modal += 1
    if n_hi >= 3:
        checks.append(_result("distribution_sum", f"3<=n<={n_hi}",
                              worst, tightest))
        checks.append(_result("histogram_zero_bin_modal",
                              f"3<=n<={n_hi}; bins=9", bad_modal, 1))

    return checks
