import itertools

import pytest

from polychar import algebra


@pytest.fixture(scope="session")
def a1():
    return algebra("A1")


@pytest.fixture(scope="session")
def a2():
    return algebra("A2")


@pytest.fixture(scope="session")
def b2():
    return algebra("B2")


@pytest.fixture(scope="session")
def g2():
    return algebra("G2")


@pytest.fixture(scope="session")
def a3():
    return algebra("A3")


@pytest.fixture(scope="session")
def b3():
    return algebra("B3")


def dominant_weights(rank, max_label_sum):
    """All dominant weights with sum of Dynkin labels up to the bound."""
    out = []
    for labels in itertools.product(range(max_label_sum + 1), repeat=rank):
        if sum(labels) <= max_label_sum:
            out.append(labels)
    return sorted(out)
