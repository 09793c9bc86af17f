import random

import pytest

from cutpoly import (EliminationState, Graph, K33MinorError, cut_weight,
                     maxcut, maxcut_bruteforce, planar_maxcut)
from cutpoly.maxcut import NonPlanarError
from helpers import (complete, cycle, double_k5, forced_cut_optimum, k33,
                     octahedron, random_planar_2connected)


def test_bruteforce_examples():
    assert maxcut_bruteforce(complete(5)).value == 6
    assert maxcut_bruteforce(cycle(4)).value == 4
    res = maxcut_bruteforce(Graph(2, [(0, 1, -3)]))
    assert res.value == 0 and res.cut.side == 0


def test_bruteforce_tie_break_is_lexicographic():
    g = Graph(3, [(0, 1, 0), (0, 2, 0), (1, 2, 0)])  # everything ties at 0
    res = maxcut_bruteforce(g)
    assert res.cut.side == 0  # smallest canonical side: the empty one


def test_planar_maxcut_c4_and_forcing():
    g = cycle(4)
    assert planar_maxcut(g).value == 4
    assert planar_maxcut(g, (0, True)).value == 4
    assert planar_maxcut(g, (0, False)).value == 2


def test_planar_maxcut_rejects():
    with pytest.raises(NonPlanarError):
        planar_maxcut(complete(5))
    from cutpoly import NotTwoConnectedError
    with pytest.raises(NotTwoConnectedError):
        planar_maxcut(Graph(3, [(0, 1, 1), (1, 2, 1)]))


def test_planar_maxcut_matches_bruteforce():
    for seed in range(40):
        g = random_planar_2connected(seed)
        rb = maxcut_bruteforce(g)
        rp = planar_maxcut(g)
        assert rp.value == rb.value
        assert cut_weight(g, rp.cut) == rp.value


def test_planar_forced_variants_consistent():
    rnd = random.Random(4)
    for seed in range(30):
        g = random_planar_2connected(seed + 100)
        idx = rnd.randrange(len(g.edges))
        r_in = planar_maxcut(g, (idx, True))
        r_out = planar_maxcut(g, (idx, False))
        assert max(r_in.value, r_out.value) == planar_maxcut(g).value
        assert r_in.value == forced_cut_optimum(g, idx, True)
        assert r_out.value == forced_cut_optimum(g, idx, False)
        assert (r_in.cut.indicator >> idx) & 1 == 1
        assert (r_out.cut.indicator >> idx) & 1 == 0


# -- elimination steps -----------------------------------------------------------

def two_triangles(w0, w1, w2, w3, w4):
    """Triangles 0-2-1 and 0-3-1 sharing the original edge 0-1."""
    return Graph(4, [(0, 1, w0), (0, 2, w1), (1, 2, w2), (0, 3, w3), (1, 3, w4)])


@pytest.mark.parametrize("weights", [
    (2, 3, 5, -1, 4), (-3, 1, 1, 2, 2), (0, 0, 0, 0, 0), (5, -2, -4, 1, 1),
])
def test_first_step_betas_on_shared_triangles(weights):
    """First elimination of a triangle leaf: beta+ = w(ab) + max of its two
    side weights, beta- = max(0, their sum).  Verified against the hand
    enumeration of the four cuts of a triangle."""
    w0, w1, w2, w3, w4 = weights
    g = two_triangles(*weights)
    state = EliminationState(g)
    leaf = state.eligible_leaves()[0]
    step = state.eliminate(leaf)
    ww1, ww2 = (w1, w2) if 2 in step.nodes else (w3, w4)
    assert step.beta_plus == w0 + max(ww1, ww2)
    assert step.beta_minus == max(0, ww1 + ww2)
    assert step.gamma == step.beta_plus - step.beta_minus
    value, _assign = state.run()
    assert value == maxcut_bruteforce(g).value


def test_k5_leaf_betas():
    """Leaf K5 skeleton with unit originals.  The virtual edge carries the
    weight of its parallel original: with the augmented weight-0 edge the
    best ab-in-cut value is 5 and the best ab-out value is 6 (enumeration
    over the 16 cuts of K5); with a unit parallel edge both are 6."""
    state = EliminationState(double_k5())
    step = state.eliminate(state.eligible_leaves()[0])
    assert (step.beta_plus, step.beta_minus) == (5, 6)
    value, _ = state.run()
    assert value == 12

    # strict variant: keep the shared edge with weight 1
    g = double_k5().with_edge(0, 1, 1)
    state = EliminationState(g)
    step = state.eliminate(state.eligible_leaves()[0])
    assert (step.beta_plus, step.beta_minus) == (6, 6)


def test_s_node_c4_leaf_betas():
    """C4 leaf (cycle skeleton) glued on a unit edge: the four cuts of C4
    containing the virtual edge are three pairs (value 2 each) and the
    all-edges cut (value 4), so beta+ = 4; beta- = 2."""
    g = Graph(5, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1),
                  (0, 4, 1), (1, 4, 1)])
    state = EliminationState(g)
    leaf = next(l for l in state.eligible_leaves()
                if len(state.skel_edges[l]) == 4)
    step = state.eliminate(leaf)
    assert (step.beta_plus, step.beta_minus) == (4, 2)
    value, _ = state.run()
    assert value == maxcut_bruteforce(g).value


def test_elimination_telescope():
    """Accumulated beta-minus plus the final component's optimum equals
    the reported value."""
    g = double_k5()
    state = EliminationState(g)
    while not state.done():
        state.eliminate(state.eligible_leaves()[0])
    (final,) = state.adj
    final_value, _side = state._skeleton_cut(final, None)
    value, _assign = state.run()
    assert state.base == sum(s.beta_minus for s in state.steps)
    assert value == state.base + final_value
    assert value == maxcut_bruteforce(g).value


def test_eliminate_rejects_non_leaves():
    state = EliminationState(double_k5())
    import pytest as _pytest
    from cutpoly import GraphError
    leaf = state.eligible_leaves()[0]
    other = [i for i in state.alive() if i != leaf]
    with _pytest.raises(GraphError):
        state.eliminate(10_000)
    # a P node is never eliminable by hand
    p_nodes = [i for i in state.alive() if state.kind[i] == "P"]
    if p_nodes:
        with _pytest.raises(GraphError):
            state.eliminate(p_nodes[0])


# -- the full solver -----------------------------------------------------------

def test_maxcut_double_k5_is_12():
    res = maxcut(double_k5())
    assert res.value == 12
    assert cut_weight(double_k5(), res.cut) == 12
    # every optimum keeps the glued pair 0, 1 on a common side
    side = set(res.cut.side_nodes())
    assert (0 in side) == (1 in side)


def test_maxcut_two_triangles_unit():
    g = two_triangles(1, 1, 1, 1, 1)
    assert maxcut(g).value == 4


def test_maxcut_k5_block():
    assert maxcut(complete(5)).value == maxcut_bruteforce(complete(5)).value == 6


def test_maxcut_rejects_k33():
    with pytest.raises(K33MinorError) as err:
        maxcut(k33())
    assert err.value.witness is not None


def test_maxcut_handles_blocks_and_components():
    # two components, one with a cut node
    g = Graph(9, [(0, 1, 3), (1, 2, -1), (1, 3, 4), (2, 3, 2),
                  (4, 5, 2), (5, 6, 5), (4, 6, -2),
                  (7, 8, -4)])
    res = maxcut(g)
    assert res.value == maxcut_bruteforce(g).value
    assert cut_weight(g, res.cut) == res.value


def test_maxcut_empty_and_tiny():
    assert maxcut(Graph(0, [])).value == 0
    assert maxcut(Graph(3, [])).value == 0
    assert maxcut(Graph(2, [(0, 1, 5)])).value == 5


class _Chooser:
    def __init__(self, seed):
        self.rnd = random.Random(seed)

    def choice(self, seq):
        return seq[self.rnd.randrange(len(seq))]


def test_leaf_order_independence():
    from cutpoly import GeneratorSpec, gen_k33free
    for seed in (3, 17, 40, 77):
        g = gen_k33free(GeneratorSpec(seed=seed, component_count=3,
                                      strict=False, deletion_prob=(1, 10)))
        baseline = maxcut(g).value
        for trial in range(4):
            got = maxcut(g, order=_Chooser(seed * 100 + trial)).value
            assert got == baseline


def test_maxcut_matches_bruteforce_on_planar_unions():
    for seed in range(25):
        g = random_planar_2connected(seed + 300, nmax=9)
        res = maxcut(g)
        assert res.value == maxcut_bruteforce(g).value
        assert cut_weight(g, res.cut) == res.value


def test_maxcut_octahedron():
    assert maxcut(octahedron()).value == maxcut_bruteforce(octahedron()).value


def test_maxcut_oracle_equivalence_up_to_20_nodes():
    from cutpoly import GeneratorSpec, gen_k33free
    count = 0
    for seed in range(1000, 1060):
        spec = GeneratorSpec(seed=seed, component_count=2 + (seed % 3),
                             kinds=("k5", "triangulation"), tri_size=(4, 7),
                             strict=(seed % 3 == 0), deletion_prob=(4, 20),
                             weight_range=(-10, 10))
        g = gen_k33free(spec)
        if g.node_count > 20:
            continue
        count += 1
        res = maxcut(g)
        assert res.value == maxcut_bruteforce(g).value, seed
        assert cut_weight(g, res.cut) == res.value, seed
    assert count >= 40


def test_maxcut_blocks_and_unions_random():
    """Disjoint unions of generated pieces, chained through shared cut
    nodes, exercise the block-splitting and witness-gluing paths."""
    from cutpoly import GeneratorSpec, gen_k33free
    rnd = random.Random(11)
    for trial in range(20):
        g1 = gen_k33free(GeneratorSpec(seed=900 + trial, component_count=1,
                                       tri_size=(4, 5), weight_range=(-6, 6)))
        g2 = gen_k33free(GeneratorSpec(seed=950 + trial, component_count=1,
                                       tri_size=(4, 5), weight_range=(-6, 6)))
        n1 = g1.node_count
        edges = list(g1.edges) + [(u + n1, v + n1, w) for u, v, w in g2.edges]
        n = n1 + g2.node_count
        if trial % 2:
            # fuse them at a cut node by a bridge, sometimes a pendant path
            edges.append((rnd.randrange(n1), n1 + rnd.randrange(g2.node_count),
                          rnd.randint(-6, 6)))
        g = Graph(n, edges)
        if g.node_count > 22:
            continue
        res = maxcut(g)
        assert res.value == maxcut_bruteforce(g).value, trial
        assert cut_weight(g, res.cut) == res.value
