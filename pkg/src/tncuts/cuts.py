"""Monochromatic cuts, colour cuts, and min-product cuts on bicoloured trees.

A leaf subset A two-colours the leaves.  A monochromatic cut is an edge set
whose removal leaves every component's leaves single-coloured (components
without leaves are unconstrained); a colour cut leaves every component with
at least one leaf of each colour.  Minimum/maximum sizes are computed by a
two-pass dynamic program over the rooted orientation; the brute-force
routine is a fully independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .trees import EdgeId, Tree

_INF = 1 << 40
_BRUTE_EXHAUSTIVE_EDGES = 14
_BRUTE_MAX_EDGES = 22


@dataclass(frozen=True)
class CutResult:
    """A cut size (None = no such cut exists) plus one witness achieving it."""

    size: int | None
    witness: frozenset[EdgeId]


@dataclass(frozen=True)
class ProductCut:
    """Exact minimum of prod f(e) over monochromatic cuts, with a witness."""

    product: int
    witness: frozenset[EdgeId]


# -- minimum monochromatic cut ---------------------------------------------


def _mono_costs(tree: Tree, amask: int) -> tuple[list[int], list[int]]:
    # state: colour class of the component containing the vertex
    # (0 = outside A, 1 = inside A); leaves force their state.
    c0 = [0] * tree.num_vertices
    c1 = [0] * tree.num_vertices
    n = tree.n
    children = tree._children
    for v in tree._postorder:
        if v < n:
            b0, b1 = (_INF, 0) if (amask >> v) & 1 else (0, _INF)
        else:
            b0 = b1 = 0
        for u, _ in children[v]:
            u0 = c0[u]
            u1 = c1[u]
            cut = (u0 if u0 < u1 else u1) + 1
            b0 += u0 if u0 < cut else cut
            b1 += u1 if u1 < cut else cut
        c0[v] = b0
        c1[v] = b1
    return c0, c1


def _min_mono_size(tree: Tree, amask: int) -> int:
    if amask == 0 or amask == tree._full_mask:
        return 0
    c0, c1 = _mono_costs(tree, amask)
    return min(c0[0], c1[0])


def _mono_witness(tree: Tree, c0: list[int], c1: list[int]) -> frozenset[EdgeId]:
    # On ties prefer keeping the edge, which pushes cuts towards the leaves.
    cut_edges = []
    stack = [(0, 0 if c0[0] <= c1[0] else 1)]
    while stack:
        v, s = stack.pop()
        for u, ei in tree._children[v]:
            keep = c0[u] if s == 0 else c1[u]
            cut = min(c0[u], c1[u]) + 1
            if keep <= cut:
                stack.append((u, s))
            else:
                cut_edges.append(ei)
                stack.append((u, 0 if c0[u] <= c1[u] else 1))
    return frozenset(tree._edge_ids[i] for i in cut_edges)


def min_mono_cut(tree: Tree, a: Iterable[int]) -> CutResult:
    """Minimum edge set whose removal leaves every component monochromatic."""
    amask = tree.mask_of(a)
    if amask == 0 or amask == tree._full_mask:
        return CutResult(0, frozenset())
    c0, c1 = _mono_costs(tree, amask)
    return CutResult(min(c0[0], c1[0]), _mono_witness(tree, c0, c1))


# -- minimum product over monochromatic cuts -------------------------------


def _check_edge_function(tree: Tree, f: Mapping[EdgeId, int]) -> list[int]:
    values = []
    for eid in tree.edges():
        if eid not in f:
            raise ValueError(f"edge function is missing edge {eid}")
        v = f[eid]
        if v < 1:
            raise ValueError(f"edge function must be >= 1 everywhere, got {v} at {eid}")
        values.append(v)
    return values


def min_product_cut(tree: Tree, a: Iterable[int], f: Mapping[EdgeId, int]) -> ProductCut:
    """Minimise prod f(e) over monochromatic cuts for A, exactly."""
    fvals = _check_edge_function(tree, f)
    amask = tree.mask_of(a)
    if amask == 0 or amask == tree._full_mask:
        return ProductCut(1, frozenset())
    inf = float("inf")
    n = tree.n
    c0: list = [1] * tree.num_vertices
    c1: list = [1] * tree.num_vertices
    for v in tree._postorder:
        if v < n:
            b0, b1 = (inf, 1) if (amask >> v) & 1 else (1, inf)
        else:
            b0 = b1 = 1
        for u, ei in tree._children[v]:
            u0 = c0[u]
            u1 = c1[u]
            cut = (u0 if u0 < u1 else u1) * fvals[ei]
            b0 *= u0 if u0 < cut else cut
            b1 *= u1 if u1 < cut else cut
        c0[v] = b0
        c1[v] = b1
    cut_edges = []
    stack = [(0, 0 if c0[0] <= c1[0] else 1)]
    while stack:
        v, s = stack.pop()
        for u, ei in tree._children[v]:
            keep = c0[u] if s == 0 else c1[u]
            cut = min(c0[u], c1[u]) * fvals[ei]
            if keep <= cut:
                stack.append((u, s))
            else:
                cut_edges.append(ei)
                stack.append((u, 0 if c0[u] <= c1[u] else 1))
    best = min(c0[0], c1[0])
    assert best != float("inf")
    return ProductCut(int(best), frozenset(tree._edge_ids[i] for i in cut_edges))


# -- maximum colour cut ------------------------------------------------------


def max_colour_cut(tree: Tree, a: Iterable[int]) -> CutResult:
    """Maximum edge set whose removal leaves every component bicoloured.

    Returns size None when A or its complement is empty (no colour cut
    exists, not even the empty one).
    """
    amask = tree.mask_of(a)
    if amask == 0 or amask == tree._full_mask:
        return CutResult(None, frozenset())
    n = tree.n
    # state bits: 1 = component seen an A leaf, 2 = seen a non-A leaf
    states: list[dict[int, int] | None] = [None] * tree.num_vertices
    choices: list[list[dict[int, tuple[int, int, bool]]]] = [[] for _ in range(tree.num_vertices)]
    for v in tree._postorder:
        if v < n:
            acc = {1 if (amask >> v) & 1 else 2: 0}
        else:
            acc = {0: 0}
        tables = choices[v]
        for u, _ in tree._children[v]:
            child = states[u]
            cut_gain = child.get(3)
            table: dict[int, tuple[int, int, bool]] = {}
            nxt: dict[int, int] = {}
            for ps in sorted(acc):
                pg = acc[ps]
                if cut_gain is not None:
                    g = pg + cut_gain + 1
                    if g > nxt.get(ps, -1):
                        nxt[ps] = g
                        table[ps] = (ps, 3, True)
                for cs in sorted(child):
                    rs = ps | cs
                    g = pg + child[cs]
                    if g > nxt.get(rs, -1):
                        nxt[rs] = g
                        table[rs] = (ps, cs, False)
            acc = nxt
            tables.append(table)
        states[v] = acc
    best = states[0].get(3)
    if best is None:
        return CutResult(None, frozenset())
    cut_edges = []
    stack = [(0, 3)]
    while stack:
        v, s = stack.pop()
        kids = tree._children[v]
        tables = choices[v]
        for i in range(len(kids) - 1, -1, -1):
            ps, cs, was_cut = tables[i][s]
            u, ei = kids[i]
            if was_cut:
                cut_edges.append(ei)
                stack.append((u, 3))
            else:
                stack.append((u, cs))
            s = ps
    return CutResult(best, frozenset(tree._edge_ids[i] for i in cut_edges))


# -- verification -------------------------------------------------------------


def _component_flags(tree: Tree, a: Iterable[int], cut: Iterable[EdgeId]):
    amask = tree.mask_of(a)
    cut_idx = {tree._edge_pos[tree.resolve_edge(eid)] for eid in cut}
    parent = list(range(tree.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, (u, v) in enumerate(tree._edge_ends):
        if i not in cut_idx:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    flags: dict[int, list[bool]] = {}
    for v in range(tree.num_vertices):
        flags.setdefault(find(v), [False, False])
    for leaf in range(tree.n):
        flag = flags[find(leaf)]
        flag[1 if (amask >> leaf) & 1 else 0] = True
    return flags


def verify_mono_cut(tree: Tree, a: Iterable[int], cut: Iterable[EdgeId]) -> bool:
    """True iff removing ``cut`` leaves no component with leaves of both colours."""
    flags = _component_flags(tree, a, cut)
    return all(not (has_b and has_a) for has_b, has_a in flags.values())


def verify_colour_cut(tree: Tree, a: Iterable[int], cut: Iterable[EdgeId]) -> bool:
    """True iff removing ``cut`` leaves every component with leaves of both colours."""
    flags = _component_flags(tree, a, cut)
    return all(has_b and has_a for has_b, has_a in flags.values())


# -- independent oracle --------------------------------------------------------


def brute_force_min_mono(tree: Tree, a: Iterable[int]) -> int:
    """Independent minimum-monochromatic-cut value.

    Up to 14 edges: exhaustive subset search, smallest edge set separating
    every A leaf from every non-A leaf.  Up to 22 edges: the same value via
    unit-capacity max-flow between the two colour classes (menger duality).
    """
    n_edges = len(tree.edges())
    if n_edges > _BRUTE_MAX_EDGES:
        raise ValueError(f"tree too large for the brute-force oracle ({n_edges} edges)")
    amask = tree.mask_of(a)
    if amask == 0 or amask == tree._full_mask:
        return 0
    if n_edges <= _BRUTE_EXHAUSTIVE_EDGES:
        return _brute_subset_scan(tree, amask)
    return _min_cut_by_flow(tree, amask)


def _brute_subset_scan(tree: Tree, amask: int) -> int:
    paths = tree.pair_path_masks()
    a_leaves = [i for i in range(tree.n) if (amask >> i) & 1]
    b_leaves = [i for i in range(tree.n) if not (amask >> i) & 1]
    pair_masks = sorted({paths[x][y] for x in a_leaves for y in b_leaves})
    relevant = 0
    for m in pair_masks:
        relevant |= m
    edges = [i for i in range(len(tree.edges())) if (relevant >> i) & 1]
    for size in range(1, len(edges) + 1):
        for combo in combinations(edges, size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if all(pm & mask for pm in pair_masks):
                return size
    raise AssertionError("cutting all edges always separates the colours")


def _min_cut_by_flow(tree: Tree, amask: int) -> int:
    import networkx as nx

    g = nx.DiGraph()
    big = len(tree.edges()) + 1
    for u, v in tree._edge_ends:
        g.add_edge(u, v, capacity=1)
        g.add_edge(v, u, capacity=1)
    for leaf in range(tree.n):
        if (amask >> leaf) & 1:
            g.add_edge("s", leaf, capacity=big)
        else:
            g.add_edge(leaf, "t", capacity=big)
    return nx.maximum_flow_value(g, "s", "t")
