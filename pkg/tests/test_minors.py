import itertools
import random

import pytest

from cutpoly import Graph, GraphError, has_minor, minor_exhaustive
from helpers import complete, cycle, double_k5, k33, octahedron, path


def test_k5_has_no_k33_minor():
    assert not has_minor(complete(5), "K33")


def test_c4_has_c4_minor():
    assert has_minor(cycle(4), "C4")


def test_double_k5_is_k33_minor_free():
    assert not has_minor(double_k5(), "K33")


def test_named_cases():
    assert has_minor(k33(), "K33")
    assert not has_minor(k33(), "K5")
    assert has_minor(complete(6), "K5") and has_minor(complete(6), "K33")
    assert not has_minor(octahedron(), "K5")
    assert not has_minor(octahedron(), "K33")
    assert has_minor(complete(5), "K5")
    assert not has_minor(complete(4), "K5")
    assert not has_minor(path(5), "C4")
    paw = Graph(4, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (2, 3, 1)])
    assert not has_minor(paw, "C4")


def test_unknown_minor_rejected():
    with pytest.raises(GraphError):
        has_minor(complete(3), "K4")


def test_structural_matches_exhaustive():
    rnd = random.Random(5)
    for _ in range(120):
        n = rnd.randrange(3, 8)
        edges = [(u, v, 1) for u in range(n) for v in range(u + 1, n)
                 if rnd.random() < 0.5]
        g = Graph(n, edges)
        for h in ("K5", "K33", "C4"):
            assert has_minor(g, h) == minor_exhaustive(g, h), (g.edges, h)


def test_minor_monotone_under_edge_addition():
    for seed in range(20):
        rnd = random.Random(seed)
        n = rnd.randrange(4, 8)
        present = []
        state = {h: False for h in ("K5", "K33", "C4")}
        pairs = list(itertools.combinations(range(n), 2))
        rnd.shuffle(pairs)
        for u, v in pairs:
            present.append((u, v, 1))
            g = Graph(n, present)
            for h in state:
                now = has_minor(g, h)
                assert now or not state[h], "minor vanished after adding an edge"
                state[h] = now
        # the complete graph ends with everything (n >= 6) or K5/C4 only
        if n >= 6:
            assert all(state.values())
