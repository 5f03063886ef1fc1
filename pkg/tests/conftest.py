import random

import pytest

import torus
from torus.group import T

BUNDLED = ("identity", "inversion", "permutation", "fib", "psi", "rank3")


@pytest.fixture(scope="session")
def fib():
    return torus.bundled("fib")


@pytest.fixture(scope="session")
def psi():
    return torus.bundled("psi")


@pytest.fixture(scope="session")
def perm():
    return torus.bundled("permutation")


@pytest.fixture(scope="session", params=BUNDLED)
def phi(request):
    return torus.bundled(request.param)


def gw(phi, text):
    return torus.parse_group_word(phi.alphabet, text)


def random_letters(rng, rank, n, t_density=0.0):
    """Arbitrary (possibly unreduced) letter sequence."""
    out = []
    for _ in range(n):
        if rng.random() < t_density:
            out.append(T if rng.random() < 0.5 else -T)
        else:
            out.append(rng.randrange(1, rank + 1) * rng.choice((1, -1)))
    return out


@pytest.fixture
def rng():
    return random.Random(20061010)
