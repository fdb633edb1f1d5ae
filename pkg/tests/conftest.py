import pytest

from mcond.actions import (
    basic_c_monoid,
    functional_c_monoid,
    pointwise_c_monoid,
    three_element_carrier,
    two_element_carrier,
)
from mcond.algebras import mk_three, power_ada


@pytest.fixture(scope="session")
def three():
    return mk_three()


@pytest.fixture(scope="session")
def three_sq():
    return power_ada(2)


@pytest.fixture(scope="session")
def basic2():
    return basic_c_monoid(two_element_carrier())


@pytest.fixture(scope="session")
def basic3():
    return basic_c_monoid(three_element_carrier())


@pytest.fixture(scope="session")
def pointwise3():
    return pointwise_c_monoid(three_element_carrier(), 1)


@pytest.fixture(scope="session")
def fcm1():
    return functional_c_monoid(1)


@pytest.fixture(scope="session")
def fcm2():
    return functional_c_monoid(2)


@pytest.fixture(scope="session")
def bundled(basic2, basic3, pointwise3, fcm1, fcm2):
    return (basic2, basic3, pointwise3, fcm1, fcm2)
