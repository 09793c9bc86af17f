import random

import pytest

from cutpoly import (Graph, K33MinorError, NotTwoConnectedError,
                     augment_with_parallel_originals, has_minor,
                     is_k_connected, k33_decompose, maximal_completion,
                     minor_exhaustive, recompose, spr_tree)
from cutpoly.spqr import _skeleton_graph
from helpers import (complete, cycle, double_k5, k33, octahedron, path,
                     random_2connected, random_graph)


def test_spr_k5_single_r():
    t = spr_tree(complete(5))
    assert len(t.nodes) == 1 and t.nodes[0].kind == "R" and not t.tree_edges


def test_spr_c5_single_s():
    t = spr_tree(cycle(5))
    assert len(t.nodes) == 1 and t.nodes[0].kind == "S"


def test_spr_double_k5():
    t = spr_tree(double_k5())
    assert sorted(sn.kind for sn in t.nodes) == ["R", "R"]
    for sn in t.nodes:
        sg, _ = _skeleton_graph(sn)
        assert sg.node_count == 5 and len(sg.edges) == 10  # each side a K5
    assert len(t.tree_edges) == 1


def test_spr_requires_2_connected():
    with pytest.raises(NotTwoConnectedError):
        spr_tree(path(4))


def test_spr_invariants_random():
    checked = 0
    for seed in range(150):
        g = random_2connected(seed)
        if g is None:
            continue
        checked += 1
        t = spr_tree(g)
        assert recompose(t, g.node_count) == g
        kinds = {sn.id: sn.kind for sn in t.nodes}
        for a, b, _pid in t.tree_edges:
            assert not (kinds[a] == kinds[b] and kinds[a] in "SP")
        pid_count = {}
        for sn in t.nodes:
            for e in sn.virtuals():
                pid_count[e.ref] = pid_count.get(e.ref, 0) + 1
            if sn.kind == "P":
                assert len(sn.nodes) == 2 and len(sn.edges) >= 3
            if sn.kind == "S":
                assert len(sn.edges) == len(sn.nodes) >= 3
            if sn.kind == "R":
                sg, _ = _skeleton_graph(sn)
                assert is_k_connected(sg, 3)
        assert all(c == 2 for c in pid_count.values())
        if len(t.nodes) > 1:
            assert len(t.tree_edges) == len(t.nodes) - 1
    assert checked >= 100


def test_spr_unique_under_relabeling():
    def signature(t, relabel):
        sigs = []
        for sn in t.nodes:
            orig = tuple(sorted(
                (min(relabel[e.u], relabel[e.v]), max(relabel[e.u], relabel[e.v]))
                for e in sn.originals()))
            virt = tuple(sorted(
                (min(relabel[e.u], relabel[e.v]), max(relabel[e.u], relabel[e.v]))
                for e in sn.virtuals()))
            sigs.append((sn.kind, orig, virt))
        return sorted(sigs)

    done = 0
    for seed in range(60):
        g = random_2connected(seed)
        if g is None:
            continue
        done += 1
        t1 = spr_tree(g)
        perm = list(range(g.node_count))
        random.Random(seed + 999).shuffle(perm)
        g2 = Graph(g.node_count,
                   sorted((min(perm[u], perm[v]), max(perm[u], perm[v]), w)
                          for u, v, w in g.edges))
        t2 = spr_tree(g2)
        ident = {v: v for v in range(g.node_count)}
        assert signature(t1, perm) == signature(t2, ident)
    assert done >= 40


# -- augmentation ---------------------------------------------------------------

def test_augment_double_k5():
    g = double_k5()
    g2, t2 = augment_with_parallel_originals(g, spr_tree(g))
    assert len(g2.edges) == len(g.edges) + 1
    assert g2.edges[-1] == (0, 1, 0)
    assert sorted(sn.kind for sn in t2.nodes) == ["P", "R", "R"]
    assert recompose(t2, 8) == g2


def test_augment_strict_2_sum_unchanged():
    g = Graph(4, [(0, 1, 5), (0, 2, 1), (1, 2, 2), (0, 3, 3), (1, 3, 4)])
    g2, t2 = augment_with_parallel_originals(g, spr_tree(g))
    assert g2 == g and len(t2.nodes) == 3


def test_augment_octahedron_unchanged():
    g = octahedron()
    g2, _t2 = augment_with_parallel_originals(g, spr_tree(g))
    assert g2 == g


def test_augment_every_virtual_gets_parallel_original():
    for seed in range(80):
        g = random_2connected(seed)
        if g is None:
            continue
        g2, t2 = augment_with_parallel_originals(g, spr_tree(g))
        assert recompose(t2, g.node_count) == g2
        kinds = {sn.id: sn.kind for sn in t2.nodes}
        for a, b, _pid in t2.tree_edges:
            assert (kinds[a] == "P") != (kinds[b] == "P")
        for sn in t2.nodes:
            for e in sn.virtuals():
                assert g2.has_edge(e.u, e.v)
        for i in range(len(g.edges), len(g2.edges)):
            assert g2.edges[i][2] == 0


# -- K33 classification -----------------------------------------------------------

def test_k33_decompose_k5():
    d = k33_decompose(complete(5))
    assert d.is_k33_minor_free and d.is_maximal
    assert [cls for _sn, cls in d.components] == ["K5"]


def test_k33_decompose_k33_itself():
    d = k33_decompose(k33())
    assert not d.is_k33_minor_free and d.witness is not None


def test_k33_decompose_double_k5_not_maximal():
    d = k33_decompose(double_k5())
    assert d.is_k33_minor_free and not d.is_maximal


def test_k33_decompose_small_cases():
    assert k33_decompose(Graph(2, [(0, 1, 1)])).is_maximal
    assert k33_decompose(complete(3)).is_maximal
    assert k33_decompose(octahedron()).is_maximal
    assert not k33_decompose(cycle(4)).is_maximal
    assert not k33_decompose(path(3)).is_maximal
    assert not k33_decompose(Graph(4, [(0, 1, 1), (2, 3, 1)])).is_maximal


def test_k33_decompose_agrees_with_minor_oracle():
    for seed in range(80):
        g = random_graph(seed, nmax=7)
        assert k33_decompose(g).is_k33_minor_free == (not minor_exhaustive(g, "K33"))


# -- maximal completion ------------------------------------------------------------

def test_completion_double_k5():
    h, added = maximal_completion(double_k5())
    assert added == [(0, 1)]
    assert k33_decompose(h).is_maximal


def test_completion_c4_one_chord():
    h, added = maximal_completion(cycle(4))
    assert len(added) == 1
    assert k33_decompose(h).is_maximal


def test_completion_maximal_input_unchanged():
    for g in (octahedron(), complete(5), complete(3)):
        h, added = maximal_completion(g)
        assert added == [] and h == g


def test_completion_properties_random():
    for seed in range(40):
        g = random_2connected(seed, nmax=8)
        if g is None or has_minor(g, "K33"):
            continue
        h, added = maximal_completion(g)
        assert k33_decompose(h).is_maximal
        assert not has_minor(h, "K33")
        assert is_k_connected(h, 2) or len(h.edges) <= 1
        assert len(h.edges) == len(g.edges) + len(added)
        # edge-count consistency per component class
        for sn, cls in k33_decompose(h).components:
            k = len(sn.nodes)
            if cls == "PlanarTriangulation":
                assert len(sn.edges) == 3 * k - 6
            elif cls == "K5":
                assert len(sn.edges) == 10


def test_completion_rejects_k33():
    with pytest.raises(K33MinorError):
        maximal_completion(k33())
