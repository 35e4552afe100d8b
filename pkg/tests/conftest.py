import random

import pytest

from kprime import parse, single_clause


@pytest.fixture
def rng():
    return random.Random(99)


def cl(text):
    """Clause from grammar text."""
    return single_clause(parse(text))


def f(text):
    return parse(text)
