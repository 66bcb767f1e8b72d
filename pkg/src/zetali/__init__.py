"""Stieltjes constants, eta coefficients, and the oscillating part of
the Li sequence, at arbitrary precision with cross-verified routes.

The package is organized around three coefficient families tied to the
Riemann zeta function near its pole:

* gamma_n — Stieltjes constants, the regular Laurent coefficients of
  zeta(1+s) (module :mod:`zetali.stieltjes`);
* eta_n — the Laurent coefficients of -zeta'/zeta(1+s) after removing
  the pole (module :mod:`zetali.coefficients`);
* lambda_tilde_n — the binomial transform of the eta family: the
  oscillating part of the Li sequence (module :mod:`zetali.li`).

Every quantity is computable by at least two independent routes, and
:func:`zetali.verify.run_verification` (or the ``zetali verify``
command) recomputes all of them against each other.
"""

from .errors import (
    NonInvertibleSeriesError,
    OrderMismatchError,
    PrecisionInfeasibleError,
    TableFormatError,
)
from .numerics import (
    DEFAULT_CONTEXT,
    BigRational,
    BigReal,
    PowerSeries,
    PrecisionContext,
    bernoulli,
    decimal_digits,
    default_guard_bits,
    from_decimal,
    rational_from_str,
    rational_to_str,
    series_derivative,
    series_mul,
    series_recip,
    to_decimal,
)
from .partitions import (
    MultiplicityVector,
    enumerate_constrained,
    partition_count,
    summatory_partition_count,
)
from .stieltjes import (
    CONVENTION_CLASSIC,
    CONVENTION_PAPER,
    GammaTable,
    compute_gamma_table,
    convert_convention,
    euler_maclaurin_parameters,
    gamma_limit_definition,
    load_table,
    render_table,
    save_table,
)
from .coefficients import (
    EtaTable,
    SymbolicExpansion,
    eta_from_gamma_explicit,
    eta_from_gamma_recurrence,
    eta_limit_definition,
    eta_series_oracle,
    expand_eta_symbolic,
    expand_gamma_symbolic,
    gamma_from_eta_explicit,
    modified_gamma,
    prime_power_base,
    von_mangoldt,
)
from .li import (
    LambdaRecord,
    TermDistribution,
    expand_lambda_symbolic,
    histogram,
    lambda_context,
    lambda_estimate,
    lambda_guard_bits,
    lambda_tilde_binomial,
    lambda_tilde_explicit,
    lambda_trend,
    term_distribution,
    trend_constant,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "PrecisionInfeasibleError", "OrderMismatchError",
    "NonInvertibleSeriesError", "TableFormatError",
    # numerics
    "BigReal", "BigRational", "PrecisionContext", "DEFAULT_CONTEXT",
    "default_guard_bits", "decimal_digits", "to_decimal", "from_decimal",
    "rational_to_str", "rational_from_str", "bernoulli", "PowerSeries",
    "series_mul", "series_recip", "series_derivative",
    # partitions
    "MultiplicityVector", "enumerate_constrained", "partition_count",
    "summatory_partition_count",
    # stieltjes
    "CONVENTION_PAPER", "CONVENTION_CLASSIC", "GammaTable",
    "compute_gamma_table", "euler_maclaurin_parameters",
    "gamma_limit_definition", "convert_convention", "render_table",
    "save_table", "load_table",
    # coefficients
    "EtaTable", "SymbolicExpansion", "modified_gamma",
    "eta_from_gamma_recurrence", "eta_from_gamma_explicit",
    "gamma_from_eta_explicit", "eta_series_oracle", "von_mangoldt",
    "prime_power_base", "eta_limit_definition", "expand_eta_symbolic",
    "expand_gamma_symbolic",
    # li
    "LambdaRecord", "TermDistribution", "lambda_guard_bits",
    "lambda_context", "lambda_tilde_binomial", "lambda_tilde_explicit",
    "expand_lambda_symbolic", "trend_constant", "lambda_trend",
    "term_distribution", "histogram", "lambda_estimate",
    # verify
    "CheckResult", "run_verification",
]
