from itertools import permutations

import pytest

from schubsing.perm import Perm


def all_perms(n):
    return [Perm(word) for word in permutations(range(1, n + 1))]


@pytest.fixture(scope="session")
def s4():
    return all_perms(4)


@pytest.fixture(scope="session")
def s5():
    return all_perms(5)


@pytest.fixture(scope="session")
def s6():
    return all_perms(6)
