import random

import pytest

from greenseq import Quiver, linear_quiver


def random_quiver(rng: random.Random, n: int, max_entry: int = 3) -> Quiver:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            b[i][j] = rng.randint(-max_entry, max_entry)
            b[j][i] = -b[i][j]
    return Quiver(tuple(tuple(row) for row in b))


def random_acyclic_quiver(rng: random.Random, n: int, max_mult: int = 2) -> Quiver:
    """Arrows only run forward along a random vertex order, so the result
    has no oriented cycles."""
    order = list(range(n))
    rng.shuffle(order)
    b = [[0] * n for _ in range(n)]
    for pos_i in range(n):
        for pos_j in range(pos_i + 1, n):
            m = rng.randint(0, max_mult)
            if m:
                u, v = order[pos_i], order[pos_j]
                b[u][v] = m
                b[v][u] = -m
    return Quiver(tuple(tuple(row) for row in b))


@pytest.fixture
def a2():
    return linear_quiver(2)


@pytest.fixture
def a3():
    return linear_quiver(3)
