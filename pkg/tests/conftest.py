import random

import pytest

from tanvar.fields import prime_field, rationals


@pytest.fixture
def field():
    return prime_field()


@pytest.fixture
def qq():
    return rationals()


@pytest.fixture
def rng():
    return random.Random(42)


def fresh_rng(seed=42):
    return random.Random(seed)
