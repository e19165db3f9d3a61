import random

import pytest

from freeassoc import FreeAlgebra, finite_field, rationals

QQ = rationals()
F2 = finite_field(2)
F3 = finite_field(3)
F4 = finite_field(4)
F5 = finite_field(5)
F9 = finite_field(9)


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture
def A1():
    return FreeAlgebra(QQ, 1)


@pytest.fixture
def A2():
    return FreeAlgebra(QQ, 2)


@pytest.fixture
def A3():
    return FreeAlgebra(QQ, 3)


@pytest.fixture
def B2():
    return FreeAlgebra(F4, 2)
