import os
import random

import pytest

from groupring import GroupRing, cyclic_group, free_group, parse_presentation
from ncpoly import parse_polynomial
from words import Alphabet, Word

SAMPLES = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "samples")


def sample_path(name):
    return os.path.join(SAMPLES, name)


def read_sample(name):
    with open(sample_path(name)) as f:
        return f.read()


def random_word(rng, alphabet, max_len, min_len=0):
    letters = alphabet.letters
    return Word(rng.choice(letters) for _ in range(rng.randint(min_len, max_len)))


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def xy():
    """x > y, no inverses: the alphabet of K<x,y>/(x^2 - y^2)."""
    return Alphabet.build(["x", "y"], inverses=False)


@pytest.fixture
def P(xy):
    return lambda text, alphabet=None: parse_polynomial(text, alphabet or xy)


@pytest.fixture(scope="session")
def z2_ring():
    return GroupRing(parse_presentation(read_sample("z2.txt")))


@pytest.fixture(scope="session")
def z2_default_ring():
    return GroupRing(cyclic_group(2, "x"))


@pytest.fixture(scope="session")
def c3_ring():
    return GroupRing(cyclic_group(3))


@pytest.fixture(scope="session")
def c5_ring():
    return GroupRing(cyclic_group(5))


@pytest.fixture(scope="session")
def free3_ring():
    return GroupRing(free_group(["x", "y", "z"]))
