from fractions import Fraction

import pytest

from app.initialize import get_service, initialize_application
from app.models import PolynomialSymbol


@pytest.fixture(scope="session", autouse=True)
def application():
    return initialize_application()


@pytest.fixture(scope="session")
def symbol_service(application):
    return get_service('symbol')


@pytest.fixture(scope="session")
def diophantine_service(application):
    return get_service('diophantine')


@pytest.fixture(scope="session")
def graph_service(application):
    return get_service('graph')


@pytest.fixture(scope="session")
def decision_service(application):
    return get_service('decision')


@pytest.fixture(scope="session")
def numeric_service(application):
    return get_service('numeric')


@pytest.fixture(scope="session")
def witness_service(application):
    return get_service('witness')


@pytest.fixture(scope="session")
def applications_service(application):
    return get_service('applications')


@pytest.fixture(scope="session")
def report_service(application):
    return get_service('report')


@pytest.fixture
def schrodinger():
    return PolynomialSymbol(coeffs=(0, 0, 1))


@pytest.fixture
def kdv():
    return PolynomialSymbol(coeffs=(0, 0, 0, 1))


@pytest.fixture
def quartic():
    """k^2 + k^4"""
    return PolynomialSymbol(coeffs=(0, 0, 1, 0, 1))


def divided_difference(sym: PolynomialSymbol, k: int, m: int) -> Fraction:
    """A slope under which k and m resonate"""
    p = lambda x: sum(Fraction(c) * x ** i for i, c in enumerate(sym.coeffs))
    return (p(k) - p(m)) / (k - m)
