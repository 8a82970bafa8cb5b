import random

import pytest

from rmonoid import (CapExceeded, Transformation, build_free_lrb,
                     build_hecke_a, close, from_table, is_r_trivial)


@pytest.fixture(scope="session")
def matrix_monoid():
    """Five-element monoid of two 0/1 row-stochastic matrices on 3 points."""
    return close([Transformation((0, 2, 2)), Transformation((1, 1, 2))],
                 names=["g1", "g2"])


@pytest.fixture(scope="session")
def lrb2():
    return build_free_lrb(2, names=["a", "b"])


@pytest.fixture(scope="session")
def group2():
    """Cyclic group of order 2: the smallest non-R-trivial monoid."""
    return from_table([[0, 1], [1, 0]], identity=0, generators=[1],
                      names=["x"])


@pytest.fixture(scope="session")
def trivial():
    return from_table([[0]], identity=0)


@pytest.fixture(scope="session")
def hecke3():
    return build_hecke_a(3)


@pytest.fixture(scope="session")
def hecke4():
    return build_hecke_a(4)


@pytest.fixture(scope="session")
def hecke5():
    return build_hecke_a(5)


def hecke_elt(m, digits: str) -> int:
    """Evaluate a word of 1-based generator digits, left to right."""
    return m.eval_word([int(c) - 1 for c in digits])


def subset_nodes(lat) -> dict:
    """Map 1-based generator subsets to node ids via generator labels."""
    out = {
        tuple(gi + 1 for gi in lat.generator_label(nd.node_id)): nd.node_id
        for nd in lat.nodes
    }
    assert len(out) == lat.n_nodes, "generator labels collided"
    return out


def random_r_trivial_monoids(count: int, seed: int, points: int = 6,
                             max_size: int = 50):
    """Closures of random order-decreasing maps of a chain, R-trivial only.

    Order-decreasing means f(i) <= i for every point, which already forces
    R-triviality; the explicit filter stays as a guard.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.choice((2, 3))
        gens = [
            Transformation(tuple(rng.randint(0, i) for i in range(points)))
            for _ in range(k)
        ]
        try:
            m = close(gens, cap=max_size)
        except CapExceeded:
            continue
        if is_r_trivial(m).ok:
            out.append(m)
    return out
