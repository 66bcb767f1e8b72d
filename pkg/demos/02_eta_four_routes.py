#!/usr/bin/env python3
"""Compute the eta coefficients four independent ways and watch them agree.

eta_n are the Laurent coefficients of -zeta'/zeta(1+s) - 1/s.  Routes:

  1. recurrence      eta_n = -(n+1) gamma_n - sum eta_k gamma_{n-k-1}
  2. explicit        partition sum with (p-1)! weights over all vectors
                     with r = n  (p(n) terms)
  3. series oracle   coefficients of -A'/A for A = 1 + sum gamma_n s^(n+1)
  4. defining limit  prime-power sums (von Mangoldt weights); very slow

Routes 1-3 should agree to nearly working precision; route 4 crawls in
at a few decimal digits per order of magnitude of its cutoff.
"""

from zetali import (
    PrecisionContext,
    compute_gamma_table,
    eta_from_gamma_explicit,
    eta_from_gamma_recurrence,
    eta_limit_definition,
    eta_series_oracle,
    partition_count,
    to_decimal,
)

ctx = PrecisionContext(192, 64)
N_MAX = 10

gamma = compute_gamma_table(N_MAX, ctx)
rec = eta_from_gamma_recurrence(gamma, N_MAX, ctx)
ser = eta_series_oracle(gamma, N_MAX, ctx)

print("n   eta_n (recurrence)                  |explicit-rec|  |series-rec|  terms")
for n in range(N_MAX + 1):
    explicit = eta_from_gamma_explicit(gamma, n + 1, ctx)
    with ctx.workprec():
        d_exp = abs(explicit - rec[n])
        d_ser = abs(ser[n] - rec[n])
    print(f"{n:<3d} {to_decimal(rec[n], 110):<36s}"
          f"{to_decimal(d_exp, 10):>14s}{to_decimal(d_ser, 10):>14s}"
          f"{partition_count(n + 1):>7d}")

print("\nthe slow route, eta_0 (= -gamma_0 = -0.5772156649...):")
light = PrecisionContext(64, 16)
for x in (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
    approx = eta_limit_definition(0, x, light)
    with light.workprec():
        err = abs(approx - rec[0])
    print(f"  cutoff 10^{len(str(x)) - 1}: {to_decimal(approx, 36)}  "
          f"error ~ {to_decimal(err, 8)}")

print("\n(the explicit route's term count is the partition function: "
      "p(11) = %d terms were summed for eta_10)" % partition_count(11))
