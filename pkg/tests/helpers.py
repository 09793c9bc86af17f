"""Shared builders and independent oracles for the test suite.

Oracles here stay deliberately naive (full enumeration, recursion over
subsets) so they certify the package's algorithms without sharing code
paths with them.
"""

from __future__ import annotations

import itertools
import random

from cutpoly import Graph, is_connected, is_k_connected


def complete(n: int, w: int = 1) -> Graph:
    return Graph(n, [(u, v, w) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int, w: int = 1) -> Graph:
    return Graph(n, [(i, (i + 1) % n, w) for i in range(n)])


def path(n: int, w: int = 1) -> Graph:
    return Graph(n, [(i, i + 1, w) for i in range(n - 1)])


def k33() -> Graph:
    return Graph(6, [(a, b, 1) for a in range(3) for b in range(3, 6)])


def octahedron() -> Graph:
    non_edges = {(0, 1), (2, 3), (4, 5)}
    return Graph(6, [(u, v, 1) for u in range(6) for v in range(u + 1, 6)
                     if (u, v) not in non_edges])


def double_k5() -> Graph:
    """Two K5s sharing the non-adjacent pair {0, 1} (their common edge
    deleted): nodes 0,1 shared, 2-4 in one copy, 5-7 in the other."""
    edges = []
    for u, v in itertools.combinations(range(5), 2):
        if (u, v) != (0, 1):
            edges.append((u, v, 1))
    for u, v in itertools.combinations([0, 1, 5, 6, 7], 2):
        if (u, v) != (0, 1):
            edges.append((u, v, 1))
    return Graph(8, edges)


def stacked_triangulation(n: int, rnd: random.Random) -> Graph:
    """Random planar triangulation grown from K4 by vertex-in-face insertion."""
    g = complete(4)
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    while g.node_count < n:
        f = faces.pop(rnd.randrange(len(faces)))
        v = g.node_count
        g = Graph(v + 1, list(g.edges) + [(f[0], v, 1), (f[1], v, 1), (f[2], v, 1)])
        faces += [(f[0], f[1], v), (f[0], f[2], v), (f[1], f[2], v)]
    return g


def random_planar_2connected(seed: int, nmax: int = 10,
                             weights=(-9, 9)) -> Graph:
    """Stacked triangulation, randomly reweighted, thinned while 2-connected."""
    rnd = random.Random(seed)
    g = stacked_triangulation(rnd.randrange(4, nmax + 1), rnd)
    g = g.reweighted([rnd.randint(*weights) for _ in g.edges])
    while len(g.edges) > g.node_count and rnd.random() < 0.7:
        i = rnd.randrange(len(g.edges))
        g2 = g.without_edge(i)
        if is_k_connected(g2, 2):
            g = g2
    return g


def random_2connected(seed: int, nmax: int = 10) -> Graph | None:
    """Random cycle plus ears plus chords; None if the dice land badly."""
    rnd = random.Random(seed)
    n = rnd.randrange(4, nmax + 1)
    perm = list(range(n))
    rnd.shuffle(perm)
    k = rnd.randrange(3, n + 1)
    cyc = perm[:k]
    edges = {(min(cyc[i], cyc[(i + 1) % k]), max(cyc[i], cyc[(i + 1) % k]))
             for i in range(k)}
    placed = set(cyc)
    rest = perm[k:]
    while rest:
        j = rnd.randrange(1, min(3, len(rest)) + 1)
        inner, rest = rest[:j], rest[j:]
        a, b = rnd.sample(sorted(placed), 2)
        walk = [a] + inner + [b]
        for i in range(len(walk) - 1):
            edges.add((min(walk[i], walk[i + 1]), max(walk[i], walk[i + 1])))
        placed.update(inner)
    for _ in range(rnd.randrange(0, 4)):
        a, b = rnd.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    g = Graph(n, [(u, v, rnd.randrange(-9, 10)) for u, v in sorted(edges)])
    if not is_k_connected(g, 2) or len(g.edges) < 3:
        return None
    return g


def random_graph(seed: int, nmax: int = 8, p: float = 0.5) -> Graph:
    rnd = random.Random(seed)
    n = rnd.randrange(2, nmax + 1)
    return Graph(n, [(u, v, rnd.randint(-9, 9))
                     for u in range(n) for v in range(u + 1, n)
                     if rnd.random() < p])


def connected_graphs_up_to_iso(nmax: int) -> list[Graph]:
    """All connected graphs without isolated nodes on <= nmax nodes."""
    seen = set()
    out = []
    for n in range(1, nmax + 1):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
            g = Graph(n, [(u, v, 1) for u, v in edges])
            if not is_connected(g):
                continue
            if n > 1 and any(g.degree(v) == 0 for v in range(n)):
                continue
            canon = min(tuple(sorted((min(p[u], p[v]), max(p[u], p[v]))
                                     for u, v in edges))
                        for p in itertools.permutations(range(n)))
            if (n, canon) in seen:
                continue
            seen.add((n, canon))
            out.append(g)
    return out


# -- independent oracles -------------------------------------------------------

def matching_oracle(w) -> int:
    """Minimum perfect matching cost by subset DP."""
    n = len(w)
    memo = {0: 0}

    def f(mask):
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        best = None
        mm = rest
        while mm:
            j = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            v = w[i][j] + f(rest & ~(1 << j))
            if best is None or v < best:
                best = v
        memo[mask] = best
        return best

    return f((1 << n) - 1)


def tjoin_oracle(n, edges, terminals) -> int | None:
    """Minimum T-join weight over all edge subsets."""
    best = None
    tset = set(terminals)
    for mask in range(1 << len(edges)):
        deg = [0] * n
        tot = 0
        for i, (u, v, w) in enumerate(edges):
            if (mask >> i) & 1:
                tot += w
                if u != v:
                    deg[u] ^= 1
                    deg[v] ^= 1
        if {v for v in range(n) if deg[v]} == tset:
            if best is None or tot < best:
                best = tot
    return best


def forced_cut_optimum(g: Graph, edge_index: int, in_cut: bool) -> int:
    """Brute MaxCut restricted to cuts with one edge pinned."""
    from cutpoly import cut_weight, enumerate_cuts
    vals = [cut_weight(g, c) for c in enumerate_cuts(g)
            if bool((c.indicator >> edge_index) & 1) == in_cut]
    return max(vals)
