import pytest

from besselnu.gamma_recip import default_gamma_table
from besselnu.order_derivative import SeriesConfig


@pytest.fixture(scope="session")
def gamma_table():
    return default_gamma_table()


@pytest.fixture(scope="session")
def tight_cfg():
    """Series config used wherever an oracle comparison needs full precision."""
    return SeriesConfig(tol=1e-15, max_terms=400)
