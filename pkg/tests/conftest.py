import random

import pytest

from fiberlab.fields import GF, QQ
from fiberlab.ideals import Ideal
from fiberlab.polyring import Ring


@pytest.fixture(scope="session")
def R3():
    return Ring(GF(32003), ["x", "y", "z"])


@pytest.fixture(scope="session")
def R3q():
    return Ring(QQ, ["x", "y", "z"])


def mono_ideal(ring, *exps):
    return Ideal(ring, tuple(ring.monomial(e) for e in exps))


@pytest.fixture(scope="session")
def sixgen(R3):
    # z^6, yz^5, y^2z^4, xy^2z^3, x^2y^2z^2, x^3y^3
    return mono_ideal(R3, (0, 0, 6), (0, 1, 5), (0, 2, 4),
                      (1, 2, 3), (2, 2, 2), (3, 3, 0))


@pytest.fixture(scope="session")
def sevengen(R3):
    # z^6, yz^5, xyz^4, xy^2z^3, xy^3z^2, x^2y^3z, x^3y^3
    return mono_ideal(R3, (0, 0, 6), (0, 1, 5), (1, 1, 4), (1, 2, 3),
                      (1, 3, 2), (2, 3, 1), (3, 3, 0))


@pytest.fixture(scope="session")
def monomial4(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    return Ideal(R3, (x * x, x * y, x * z, y * z))


@pytest.fixture(scope="session")
def binomial4(R3):
    x, y, z = (R3.variable(i) for i in range(3))
    return Ideal(R3, (x * x - y * y, x * y, x * z, y * z))


def random_poly(ring, degree, rng, terms=4):
    out = ring.zero()
    monos = ring.monomials_of_degree(degree)
    for _ in range(terms):
        c = ring.field.random_raw(rng)
        out = out + ring.monomial(monos[rng.randrange(len(monos))], c)
    return out


@pytest.fixture(scope="session")
def rng():
    return random.Random("fiberlab-tests")
