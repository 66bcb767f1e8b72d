import pytest

from zetali import (
    PrecisionContext,
    compute_gamma_table,
    eta_from_gamma_recurrence,
)


@pytest.fixture(scope="session")
def ctx256():
    """Default context: 192 target + 64 guard = 256 working bits."""
    return PrecisionContext(192, 64)


@pytest.fixture(scope="session")
def gamma40(ctx256):
    """Shared table gamma_0..gamma_40 at 256 working bits."""
    return compute_gamma_table(40, ctx256)


@pytest.fixture(scope="session")
def eta40(gamma40, ctx256):
    return eta_from_gamma_recurrence(gamma40, 40, ctx256)
