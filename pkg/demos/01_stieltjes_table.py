#!/usr/bin/env python3
"""Build a Stieltjes-constant table and poke at it.

Walks through the basic workflow: pick a precision context, compute the
table, compare against the slowly convergent textbook limit, switch
normalization conventions, and round-trip the table through a file.
"""

import tempfile
from pathlib import Path

from zetali import (
    CONVENTION_CLASSIC,
    PrecisionContext,
    compute_gamma_table,
    convert_convention,
    euler_maclaurin_parameters,
    gamma_limit_definition,
    load_table,
    save_table,
    to_decimal,
)

ctx = PrecisionContext(target_bits=192, guard_bits=64)
N_MAX = 12

print(f"context: {ctx.target_bits} target + {ctx.guard_bits} guard "
      f"= {ctx.working_bits} working bits")
m_cut, tail = euler_maclaurin_parameters(N_MAX, ctx)
print(f"chosen internally: Dirichlet cutoff M={m_cut}, tail order J={tail}\n")

table = compute_gamma_table(N_MAX, ctx)
print(f"gamma_0 .. gamma_{N_MAX}  (zeta(1+s) = 1/s + sum gamma_n s^n):")
for n, v in enumerate(table.values):
    print(f"  gamma_{n:<2d} = {to_decimal(v, 96)}")

# The defining limit converges like log(x)^n / x: fine as a sanity
# check, hopeless as a production route.
print("\ntruncated defining limit vs. table value, n = 0:")
light = PrecisionContext(64, 16)
for x in (10 ** 3, 10 ** 4, 10 ** 5):
    approx = gamma_limit_definition(0, x, light)
    err = abs(approx - table[0])
    print(f"  x = 10^{len(str(x)) - 1}:  {to_decimal(approx, 40)}   "
          f"error ~ {to_decimal(err, 12)}")

# Conventions: the "classic" normalization multiplies by (-1)^n n!.
classic = convert_convention(table, CONVENTION_CLASSIC)
print("\nclassic normalization of the same table (note gamma_1's sign):")
for n in (0, 1, 2):
    print(f"  classic gamma_{n} = {to_decimal(classic[n], 96)}")

# Tables round-trip through JSON (or CSV) files losslessly.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "gamma.json"
    save_table(table, path)
    again = load_table(path)
    print(f"\nsaved to {path.name} and loaded back: "
          f"values identical = {again.values == table.values}")
