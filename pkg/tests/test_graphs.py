import itertools
import random

import pytest

from cutpoly import (DuplicateEdgeError, Graph, NodeRangeError,
                     NotTwoConnectedError, ParseError, SelfLoopError,
                     SizeLimitError, blocks, chordless_cycles, cut_from_side,
                     cut_weight, ear_decomposition, enumerate_cuts,
                     format_graph, is_connected, is_k_connected, k5_subgraphs,
                     parse_graph, triangles)
from helpers import complete, cycle, path, random_graph


# -- parsing ----------------------------------------------------------------

def test_parse_single_edge():
    g = parse_graph("c hello\np cut 2 1\ne 1 2 5\n")
    assert g.node_count == 2 and g.edges == ((0, 1, 5),)


def test_parse_k3():
    g = parse_graph("p cut 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 1\n")
    assert g.edges == ((0, 1, 1), (0, 2, 1), (1, 2, 1))


def test_parse_errors_are_distinct():
    with pytest.raises(SelfLoopError):
        parse_graph("p cut 2 1\ne 1 1 2\n")
    with pytest.raises(DuplicateEdgeError):
        parse_graph("p cut 2 2\ne 1 2 1\ne 2 1 3\n")
    with pytest.raises(NodeRangeError):
        parse_graph("p cut 2 1\ne 1 3 1\n")
    with pytest.raises(ParseError):
        parse_graph("e 1 2 1\n")
    with pytest.raises(ParseError):
        parse_graph("p cut 2 2\ne 1 2 1\n")
    with pytest.raises(ParseError):
        parse_graph("p cut 2 1\nx nonsense\ne 1 2 1\n")


def test_parse_weight_bound():
    with pytest.raises(ParseError):
        parse_graph(f"p cut 2 1\ne 1 2 {2**41}\n")


def test_format_round_trip():
    g = random_graph(3)
    assert parse_graph(format_graph(g)) == g


# -- blocks -------------------------------------------------------------------

def test_blocks_path():
    bd = blocks(path(3))
    assert len(bd.blocks) == 2 and bd.cut_nodes == frozenset({1})


def test_blocks_k4_single():
    bd = blocks(complete(4))
    assert len(bd.blocks) == 1 and not bd.cut_nodes


def test_blocks_disjoint_edges():
    bd = blocks(Graph(4, [(0, 1, 1), (2, 3, 1)]))
    assert len(bd.blocks) == 2 and not bd.cut_nodes


def test_blocks_partition_edges():
    for seed in range(120):
        g = random_graph(seed)
        bd = blocks(g)
        all_edges = sorted(itertools.chain.from_iterable(e for _n, e in bd.blocks))
        assert all_edges == list(range(len(g.edges)))
        for (n1, _), (n2, _) in itertools.combinations(bd.blocks, 2):
            inter = n1 & n2
            assert len(inter) <= 1
            if inter:
                assert inter <= bd.cut_nodes


# -- connectivity ---------------------------------------------------------------

def test_is_k_connected_examples():
    assert is_k_connected(cycle(4), 2)
    assert is_k_connected(complete(5), 3)
    assert not is_k_connected(path(3), 2)
    assert not is_k_connected(Graph(2, [(0, 1, 1)]), 2)
    assert is_k_connected(complete(3), 2)
    assert not is_k_connected(complete(3), 3)


def test_connectivity_matches_blocks():
    for seed in range(60):
        g = random_graph(seed, nmax=7)
        two = is_k_connected(g, 2)
        bd = blocks(g)
        expected = (is_connected(g) and len(bd.blocks) == 1
                    and len(bd.blocks[0][1]) >= 2 and g.node_count >= 3)
        assert two == expected, (seed, g.edges)


# -- substructures -----------------------------------------------------------

def test_triangles():
    assert len(triangles(complete(3))) == 1
    assert len(triangles(complete(4))) == 4
    assert triangles(cycle(4)) == []


def test_chordless_cycles():
    assert chordless_cycles(cycle(5)) == [(0, 1, 2, 3, 4)]
    k4_cycles = chordless_cycles(complete(4))
    assert len(k4_cycles) == 4 and all(len(c) == 3 for c in k4_cycles)
    g = Graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (0, 2, 1)])
    assert len(chordless_cycles(g)) == 2


def test_chordless_cycles_cap():
    with pytest.raises(SizeLimitError):
        chordless_cycles(complete(7), cap=3)


def test_chordless_cycles_are_induced_and_unique():
    for seed in range(40):
        g = random_graph(seed, nmax=7)
        seen = set()
        for cyc in chordless_cycles(g):
            key = frozenset(cyc)
            assert key not in seen  # a node set determines an induced cycle
            seen.add(key)
            for i, j in itertools.combinations(range(len(cyc)), 2):
                consecutive = abs(i - j) in (1, len(cyc) - 1)
                assert g.has_edge(cyc[i], cyc[j]) == consecutive


def test_k5_subgraphs():
    assert len(k5_subgraphs(complete(5))) == 1
    assert len(k5_subgraphs(complete(6))) == 6
    assert k5_subgraphs(cycle(4)) == []


# -- ear decomposition -----------------------------------------------------------

def test_ears_k3_c5_k4():
    assert ear_decomposition(complete(3)) == [[0, 1, 2]]
    assert len(ear_decomposition(cycle(5))) == 1
    ears = ear_decomposition(complete(4))
    assert len(ears[0]) == 3
    assert sorted(len(p) - 1 for p in ears[1:]) == [1, 2]


def test_ears_require_2_connected():
    with pytest.raises(NotTwoConnectedError):
        ear_decomposition(path(3))


def test_ears_iff_2_connected_and_cover():
    for seed in range(80):
        g = random_graph(seed, nmax=7)
        if is_k_connected(g, 2):
            pieces = ear_decomposition(g)
            used = set()
            nodes_so_far = set(pieces[0])
            count = len(pieces[0])
            for i in range(len(pieces[0])):
                used.add(g.edge_index(pieces[0][i],
                                      pieces[0][(i + 1) % len(pieces[0])]))
            for ear in pieces[1:]:
                assert ear[0] in nodes_so_far and ear[-1] in nodes_so_far
                assert all(x not in nodes_so_far for x in ear[1:-1])
                for a, b in zip(ear, ear[1:]):
                    used.add(g.edge_index(a, b))
                nodes_so_far.update(ear)
                count += len(ear) - 1
            assert used == set(range(len(g.edges)))
            assert count == len(g.edges)
        else:
            with pytest.raises(NotTwoConnectedError):
                ear_decomposition(g)


# -- cuts ---------------------------------------------------------------------

def test_enumerate_cuts_k3():
    vectors = sorted(c.vector(3) for c in enumerate_cuts(complete(3)))
    assert vectors == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_enumerate_cuts_counts():
    assert len(enumerate_cuts(Graph(2, [(0, 1, 1)]))) == 2
    assert len(enumerate_cuts(Graph(4, [(0, 1, 1), (2, 3, 1)]))) == 4
    for seed in range(20):
        g = random_graph(seed, nmax=8)
        comps = len([1 for _ in __import__("cutpoly").connected_components(g)])
        assert len(enumerate_cuts(g)) == 2 ** (g.node_count - comps)


def test_cut_canonical_side():
    g = complete(3)
    c = cut_from_side(g, [0, 1])
    assert c.side == 0b100  # complemented: node 0 stays out
    assert cut_weight(g, c) == 2


def test_cut_cycle_even_intersection():
    for seed in range(50):
        g = random_graph(seed, nmax=7)
        cycles = chordless_cycles(g)
        for c in enumerate_cuts(g):
            for cyc in cycles:
                edges = [g.edge_index(cyc[i], cyc[(i + 1) % len(cyc)])
                         for i in range(len(cyc))]
                crossing = sum((c.indicator >> e) & 1 for e in edges)
                assert crossing % 2 == 0


def test_enumerate_cuts_guard():
    with pytest.raises(SizeLimitError):
        enumerate_cuts(Graph(25, []))
