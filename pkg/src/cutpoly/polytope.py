"""Cut-polytope machinery.

Inequality classes (edge, cycle, metric, the K5 inequality), switching,
exact validity / facet certification against enumerated cuts, complete
facet descriptions for K5-minor-free and K33-minor-free graphs, variable
elimination for edge deletions, and an exact convex-hull oracle (double
description over rationals).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graphs import (Cut, Graph, GraphError, SizeLimitError, blocks,
                     chordless_cycles, compact_graph, cut_vectors,
                     enumerate_cuts, triangles)
from . import minors as minors_mod
from . import spqr as spqr_mod
from .spqr import K33MinorError


@dataclass(frozen=True)
class LinearInequality:
    """a^T x <= rhs over edge indices, canonical: gcd of entries is 1."""
    coeffs: tuple[int, ...]
    rhs: int

    @staticmethod
    def canonical(coeffs, rhs: int) -> "LinearInequality":
        coeffs = tuple(int(c) for c in coeffs)
        if not any(coeffs):
            raise GraphError("inequality needs a nonzero coefficient")
        g = 0
        for c in coeffs:
            g = gcd(g, abs(c))
        g = gcd(g, abs(rhs))
        return LinearInequality(tuple(c // g for c in coeffs), rhs // g)

    def evaluate(self, x) -> int:
        return sum(c * v for c, v in zip(self.coeffs, x))

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)


@dataclass(frozen=True)
class InequalitySystem:
    graph: Graph
    inequalities: tuple[LinearInequality, ...]

    @staticmethod
    def of(graph: Graph, ineqs) -> "InequalitySystem":
        return InequalitySystem(graph, tuple(sorted(set(ineqs),
                                                    key=lambda q: (q.coeffs, q.rhs))))

    def as_set(self) -> frozenset[LinearInequality]:
        return frozenset(self.inequalities)


# -- inequality generators -----------------------------------------------------

def metric_inequalities(g: Graph, tri_edges) -> list[LinearInequality]:
    """The four facet forms of one triangle: the sum form and the three
    rooted difference forms."""
    es = tuple(tri_edges)
    if len(set(es)) != 3:
        raise GraphError("triangle must consist of three distinct edges")
    nodes = set()
    for i in es:
        nodes.update(g.edges[i][:2])
    if len(nodes) != 3:
        raise GraphError("edges do not form a triangle")
    for a, b in itertools.combinations(sorted(nodes), 2):
        if not g.has_edge(a, b):
            raise GraphError("edges do not form a triangle")
    m = len(g.edges)
    out = []
    base = [0] * m
    for i in es:
        base[i] = 1
    out.append(LinearInequality.canonical(base, 2))
    for root in es:
        coeffs = [0] * m
        for i in es:
            coeffs[i] = 1 if i == root else -1
        out.append(LinearInequality.canonical(coeffs, 0))
    return out


def edge_inequalities(g: Graph, edge_index: int) -> list[LinearInequality]:
    """Both bounds 0 <= x_e <= 1 when e lies in no triangle (then they are
    facets), else the empty list."""
    u, v, _w = g.edges[edge_index]
    common = {x for x, _i in g.neighbors(u)} & {x for x, _i in g.neighbors(v)}
    if common:
        return []
    m = len(g.edges)
    lo = [0] * m
    lo[edge_index] = -1
    hi = [0] * m
    hi[edge_index] = 1
    return [LinearInequality.canonical(lo, 0), LinearInequality.canonical(hi, 1)]


def cycle_inequality(g: Graph, cycle, odd_set) -> LinearInequality:
    """sum_{f in F} x_f - sum_{e in C\\F} x_e <= |F| - 1 for odd F."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise GraphError("not a cycle")
    try:
        cyc_edges = {g.edge_index(cyc[i], cyc[(i + 1) % len(cyc)])
                     for i in range(len(cyc))}
    except KeyError:
        raise GraphError("node sequence is not a cycle of the graph") from None
    f = set(odd_set)
    if len(f) % 2 == 0:
        raise GraphError("F must have odd size")
    if not f <= cyc_edges:
        raise GraphError("F must be a subset of the cycle's edges")
    coeffs = [0] * len(g.edges)
    for i in cyc_edges:
        coeffs[i] = 1 if i in f else -1
    return LinearInequality.canonical(coeffs, len(f) - 1)


def hypermetric_k5(g: Graph, five_nodes) -> LinearInequality:
    """sum of x over the 10 edges of an induced K5 <= 6."""
    nodes = sorted(set(five_nodes))
    if len(nodes) != 5:
        raise GraphError("need five distinct nodes")
    coeffs = [0] * len(g.edges)
    for a, b in itertools.combinations(nodes, 2):
        if not g.has_edge(a, b):
            raise GraphError("nodes do not induce a K5")
        coeffs[g.edge_index(a, b)] = 1
    return LinearInequality.canonical(coeffs, 6)


def switch(q: LinearInequality, w: Cut) -> LinearInequality:
    """Switching by the cut w: negate coefficients on w's edges and drop
    their original values from the right-hand side."""
    coeffs = list(q.coeffs)
    drop = 0
    for i in range(len(coeffs)):
        if (w.indicator >> i) & 1:
            drop += coeffs[i]
            coeffs[i] = -coeffs[i]
    return LinearInequality.canonical(coeffs, q.rhs - drop)


# -- exact certification -------------------------------------------------------

def _guard(g: Graph) -> None:
    if g.node_count > 22:
        raise SizeLimitError("cut enumeration guard: node_count <= 22")


def is_valid(g: Graph, q: LinearInequality) -> bool:
    _guard(g)
    return all(q.evaluate(x) <= q.rhs for x in cut_vectors(g))


def is_facet(g: Graph, q: LinearInequality) -> bool:
    _guard(g)
    return _is_facet_over(cut_vectors(g), q, len(g.edges))


def _is_facet_over(vectors, q: LinearInequality, dim: int) -> bool:
    tight = []
    for x in vectors:
        v = q.evaluate(x)
        if v > q.rhs:
            return False
        if v == q.rhs:
            tight.append(x)
    return affine_rank(tight) == dim - 1


def affine_rank(points) -> int:
    """Dimension of the affine hull of integer points (exact)."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    rows = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    return _int_rank(rows)


def _int_rank(rows) -> int:
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    col = 0
    while col < cols and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                a, b = pr[col], rows[r][col]
                g = gcd(abs(a), abs(b))
                fa, fb = b // g, a // g
                rows[r] = [fb * x - fa * y for x, y in zip(rows[r], pr)]
        rank += 1
        col += 1
    return rank


def polytope_dim(g: Graph) -> int:
    """Affine rank of the cut vectors; always equals the edge count."""
    _guard(g)
    d = affine_rank(cut_vectors(g))
    assert d == len(g.edges), "cut polytope dimension must equal |E|"
    return d


# -- convex hull oracle (double description) -----------------------------------

def brute_hull(points) -> list[LinearInequality]:
    """Exact facet list of conv(points), canonical integer inequalities.

    Points must affinely span their space (cut polytopes do).  Guards:
    dimension <= 12, <= 64 distinct points.  Method: translate the
    centroid to the origin, enumerate the polar's vertices by double
    description on its homogenization, read facets off the polar.
    """
    pts = sorted(set(tuple(int(c) for c in p) for p in points))
    if not pts:
        raise GraphError("hull of nothing")
    dim = len(pts[0])
    if dim == 0:
        return []
    if dim > 12:
        raise SizeLimitError("brute_hull guard: dimension <= 12")
    if len(pts) > 64:
        raise SizeLimitError("brute_hull guard: <= 64 vertices")
    if affine_rank(pts) != dim:
        raise GraphError("brute_hull needs full-dimensional input")
    k = len(pts)
    sums = [sum(p[i] for p in pts) for i in range(dim)]
    # polar constraints (p_i - centroid) . y <= 1, homogenized and scaled
    # by k to integer rows (k*p_i - sum, -k) . (y, t) <= 0; plus t >= 0
    rows = [[k * p[i] - sums[i] for i in range(dim)] + [-k] for p in pts]
    rows.append([0] * dim + [-1])
    rays = _dd_cone(rows)
    out = []
    for ray in rays:
        t = ray[dim]
        assert t > 0, "polar of a full-dimensional polytope is bounded"
        # vertex y = ray/t of the scaled polar; facet y.(x - centroid) <= 1
        # i.e. k*ray . x <= k*t + ray . sums (all integer after clearing t)
        coeffs = [k * c for c in ray[:dim]]
        rhs = k * t + sum(rc * sc for rc, sc in zip(ray[:dim], sums))
        out.append(LinearInequality.canonical(coeffs, rhs))
    return sorted(set(out), key=lambda q: (q.coeffs, q.rhs))


def _dd_cone(rows: list[list[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of {x : rows . x <= 0} by incremental double description.

    The cone must be pointed and full-dimensional (true for the polar
    homogenization above).  Rays come back as primitive integer vectors;
    adjacency of rays is decided combinatorially on exact tight sets.
    """
    d = len(rows[0])
    basis: list[int] = []
    mat: list[list[Fraction]] = []
    for i, r in enumerate(rows):
        cand = [row[:] for row in mat] + [[Fraction(x) for x in r]]
        if _frac_rank(cand) == len(cand):
            basis.append(i)
            mat.append([Fraction(x) for x in r])
        if len(basis) == d:
            break
    assert len(basis) == d, "constraint rows must span the space"
    inv = _invert(mat)
    done = list(basis)

    def dot(i: int, vec: tuple[int, ...]) -> int:
        return sum(a * b for a, b in zip(rows[i], vec))

    rays: list[tuple[tuple[int, ...], frozenset[int]]] = []
    for j in range(d):
        vec = _primitive([-inv[i][j] for i in range(d)])
        rays.append((vec, frozenset(i for i in done if dot(i, vec) == 0)))
    for idx, row in enumerate(rows):
        if idx in basis:
            continue
        vals = {ray[0]: dot(idx, ray[0]) for ray in rays}
        keep = [r for r in rays if vals[r[0]] < 0]
        drop = [r for r in rays if vals[r[0]] > 0]
        zero = [r for r in rays if vals[r[0]] == 0]
        new_rays = []
        for rk, rd in itertools.product(keep, drop):
            common = rk[1] & rd[1]
            if any(o is not rk and o is not rd and common <= o[1]
                   for o in rays):
                continue
            a, b = vals[rd[0]], vals[rk[0]]
            vec = _primitive([a * x - b * y for x, y in zip(rk[0], rd[0])])
            tight = frozenset(i for i in done if dot(i, vec) == 0) | {idx}
            new_rays.append((vec, tight))
        done.append(idx)
        rays = ([(v, t | {idx}) for v, t in zero]
                + keep + new_rays)
        seen: dict[tuple[int, ...], frozenset[int]] = {}
        for v, t in rays:
            seen[v] = t | seen.get(v, frozenset())
        rays = list(seen.items())
    return [v for v, _t in rays]


def _primitive(vec) -> tuple[int, ...]:
    denom = 1
    fracs = [Fraction(v) for v in vec]
    for v in fracs:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in fracs]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    assert g > 0, "zero ray"
    return tuple(c // g for c in ints)


def _frac_rank(rows: list[list[Fraction]]) -> int:
    rank = 0
    cols = len(rows[0]) if rows else 0
    col = 0
    while col < cols and rank < len(rows):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def _invert(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    d = len(mat)
    a = [list(row) + [Fraction(int(i == j)) for j in range(d)]
         for i, row in enumerate(mat)]
    for col in range(d):
        pivot = next(r for r in range(col, d) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for r in range(d):
            if r != col and a[r][col] != 0:
                fr = a[r][col]
                a[r] = [x - fr * y for x, y in zip(a[r], a[col])]
    return [row[d:] for row in a]


# -- complete facet descriptions -----------------------------------------------

def facet_description(g: Graph) -> InequalitySystem:
    """The complete irredundant facet list of the cut polytope.

    Supported classes: K5-minor-free graphs (edge + chordless-cycle
    inequalities) and K33-minor-free graphs (per-component descriptions of
    the 2-sum pieces, projected through deleted edges when the graph is
    not maximal).  Anything else is refused with the offending component.
    """
    m = len(g.edges)
    if m == 0:
        return InequalitySystem.of(g, [])
    if not minors_mod.has_minor(g, "K5"):
        return InequalitySystem.of(g, _edge_cycle_facets(g))
    out: list[LinearInequality] = []
    for bnodes, bedges in blocks(g).blocks:
        sub, to_sub = compact_graph(sorted(bnodes), [g.edges[i] for i in bedges])
        if not minors_mod.has_minor(sub, "K5"):
            ineqs = _edge_cycle_facets(sub)
        else:
            dec = spqr_mod.k33_decompose(sub)
            if not dec.is_k33_minor_free:
                back = {i: v for v, i in to_sub.items()}
                witness = spqr_mod._relabel_skeleton(dec.witness, back, bedges)
                raise K33MinorError(
                    "facet_description supports K5-minor-free or "
                    "K33-minor-free graphs only", witness)
            if dec.is_maximal:
                ineqs = _maximal_k33free_facets(sub)
            else:
                ineqs = _projected_facets(sub)
        for q in ineqs:
            coeffs = [0] * m
            for j, c in enumerate(q.coeffs):
                coeffs[bedges[j]] = c
            out.append(LinearInequality.canonical(coeffs, q.rhs))
    return InequalitySystem.of(g, out)


def _edge_cycle_facets(g: Graph) -> list[LinearInequality]:
    out = []
    for i in range(len(g.edges)):
        out.extend(edge_inequalities(g, i))
    for cyc in chordless_cycles(g):
        cyc_edges = [g.edge_index(cyc[i], cyc[(i + 1) % len(cyc)])
                     for i in range(len(cyc))]
        for r in range(1, len(cyc_edges) + 1, 2):
            for f in itertools.combinations(cyc_edges, r):
                out.append(cycle_inequality(g, cyc, f))
    return out


def _maximal_k33free_facets(g: Graph) -> list[LinearInequality]:
    """Facets of a strict 2-sum of planar triangulations and K5s: the
    union of the pieces' facet systems on shared variables.

    Triangulation pieces contribute their edge+cycle facets (computed on
    the piece, which may include chordless cycles longer than triangles);
    K5 pieces contribute their metric inequalities and the 16 switchings
    of the K5 inequality.
    """
    out: list[LinearInequality] = []
    if len(g.edges) <= 1:
        for i in range(len(g.edges)):
            out.extend(edge_inequalities(g, i))
        return out
    tree = spqr_mod.spr_tree(g)
    for sn in tree.nodes:
        if sn.kind == "P":
            continue
        # strictness means every skeleton edge (virtual or not) is a real
        # edge of g, so the piece is an honest subgraph
        sub, to_sub = compact_graph(sn.nodes,
                                    [(e.u, e.v, 0) for e in sn.edges])
        if sub.node_count == 5 and len(sub.edges) == 10:
            ineqs = [hypermetric_k5(sub, range(5))]
            ineqs = [switch(ineqs[0], c) for c in enumerate_cuts(sub)]
            for tri in triangles(sub):
                tri_idx = [sub.edge_index(a, b)
                           for a, b in itertools.combinations(tri, 2)]
                ineqs.extend(metric_inequalities(sub, tri_idx))
        else:
            ineqs = _edge_cycle_facets(sub)
        back = {i: v for v, i in to_sub.items()}
        for q in ineqs:
            coeffs = [0] * len(g.edges)
            for j, c in enumerate(q.coeffs):
                su, sv, _w = sub.edges[j]
                coeffs[g.edge_index(back[su], back[sv])] = c
            out.append(LinearInequality.canonical(coeffs, q.rhs))
    return out


def _projected_facets(g: Graph) -> list[LinearInequality]:
    """Non-maximal K33-minor-free block: complete the graph, describe the
    completion, then eliminate the added edges one at a time."""
    h, added = spqr_mod.maximal_completion(g)
    system = InequalitySystem.of(h, _maximal_k33free_facets(h))
    # added edges sit at the end of h's edge list; eliminate from the back
    # so surviving indices match g's
    for idx in range(len(h.edges) - 1, len(g.edges) - 1, -1):
        system = fourier_motzkin_project(system, idx)
    assert system.graph == g
    return list(system.inequalities)


def fourier_motzkin_project(system: InequalitySystem, edge_index: int,
                            projected_cuts=None) -> InequalitySystem:
    """Eliminate one variable from a complete facet description.

    Pairs of inequalities with opposite signs on the variable are summed
    (coefficients are +-1 for the systems handled here, so no scaling);
    zero-coefficient inequalities pass through.  Every candidate is kept
    only if it is a facet of the projection, certified against the
    projected cut vectors.
    """
    h = system.graph
    newg = h.without_edge(edge_index)
    if projected_cuts is None:
        vectors = cut_vectors(newg)
    else:
        vectors = [c.vector(len(newg.edges)) if isinstance(c, Cut) else tuple(c)
                   for c in projected_cuts]
    pos, neg, zero = [], [], []
    for q in system.inequalities:
        c = q.coeffs[edge_index]
        (zero if c == 0 else pos if c > 0 else neg).append(q)

    def drop_var(coeffs):
        return coeffs[:edge_index] + coeffs[edge_index + 1:]

    candidates: set[LinearInequality] = set()
    for q in zero:
        candidates.add(LinearInequality.canonical(drop_var(q.coeffs), q.rhs))
    for qp, qn in itertools.product(pos, neg):
        sp, sn = qp.coeffs[edge_index], -qn.coeffs[edge_index]
        coeffs = [sn * a + sp * b for a, b in zip(qp.coeffs, qn.coeffs)]
        assert coeffs[edge_index] == 0
        if not any(coeffs):
            continue
        candidates.add(LinearInequality.canonical(drop_var(tuple(coeffs)),
                                                  sn * qp.rhs + sp * qn.rhs))
    dim = len(newg.edges)
    kept = [q for q in sorted(candidates, key=lambda q: (q.coeffs, q.rhs))
            if all(abs(c) <= 1 for c in q.coeffs)  # facets here have +-1 entries
            and _is_facet_over(vectors, q, dim)]
    return InequalitySystem.of(newg, kept)
