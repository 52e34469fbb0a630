from __future__ import annotations

import pytest

from macweyl.algebra import monomial_scalar
from macweyl.rootdata import build


@pytest.fixture(scope="session")
def A1():
    return build("A1")


@pytest.fixture(scope="session")
def A2():
    return build("A2")


def qq(k: int, e: int = 2):
    """q^k as a scalar for a datum with the given e (A1 has e = 2, so q = u^4)."""
    return monomial_scalar(1, 2 * e * k, 0)


V = monomial_scalar(1, 0, 1)
