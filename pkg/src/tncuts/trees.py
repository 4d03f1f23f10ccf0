"""Unrooted leaf-labelled binary trees with canonical edge identifiers.

A tree with n >= 2 leaves carries labels 1..n on its leaves; every inner
vertex has degree 3 (the 2-leaf tree is a single edge).  Each edge is named
by the leaf bipartition it induces: the canonical key is the side whose
(size, sorted labels) pair is smaller.  Trees are immutable values, equal
exactly when they induce the same set of bipartitions.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping, Sequence

from .rng import CounterRng


class TreeParseError(ValueError):
    """Malformed parenthesised tree expression."""


class EdgeId:
    """Canonical edge name: the smaller side of the edge's leaf bipartition."""

    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[int]):
        self.labels: tuple[int, ...] = tuple(sorted(labels))
        if not self.labels:
            raise ValueError("an edge key needs at least one leaf label")

    @classmethod
    def from_key(cls, key: str) -> "EdgeId":
        """Parse a dash-joined key such as ``"1-2-3"``."""
        try:
            return cls(int(part) for part in key.split("-"))
        except ValueError as exc:
            raise ValueError(f"bad edge key {key!r}") from exc

    @property
    def key(self) -> str:
        return "-".join(map(str, self.labels))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self.labels), self.labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeId) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __lt__(self, other: "EdgeId") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.key

    def __repr__(self) -> str:
        return f"EdgeId({self.key!r})"


class Tree:
    """Unrooted leaf-labelled binary tree (immutable value).

    Construct via parse_tree() or the builders; the constructor accepts a
    raw adjacency dict plus a vertex -> label map and normalises it.
    Internally vertices are renumbered so that vertex i < n is the leaf
    with label i + 1 and inner vertices follow in a canonical order, which
    makes every traversal deterministic.
    """

    __slots__ = (
        "n",
        "num_vertices",
        "_nbrs",
        "_edge_ids",
        "_edge_pos",
        "_edge_ends",
        "_side_masks",
        "_children",
        "_parent",
        "_parent_edge",
        "_postorder",
        "_full_mask",
        "_split_key",
        "_pair_paths",
    )

    def __init__(self, adjacency: Mapping[int, Iterable[int]], leaf_labels: Mapping[int, int]):
        adj = {v: set(ns) for v, ns in adjacency.items()}
        n = len(leaf_labels)
        if n < 2:
            raise ValueError("a tree needs at least 2 leaves")
        if sorted(leaf_labels.values()) != list(range(1, n + 1)):
            raise ValueError("leaf labels must be exactly 1..n without repeats")
        num_vertices = len(adj)
        if sum(map(len, adj.values())) != 2 * (num_vertices - 1):
            raise ValueError("edge count must equal vertex count - 1")
        for v, nbrs in adj.items():
            want = 1 if v in leaf_labels else 3
            if len(nbrs) != want:
                raise ValueError("leaves must have degree 1, inner vertices degree 3")

        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != num_vertices:
            raise ValueError("tree must be connected")

        self.n = n
        self.num_vertices = num_vertices
        full = (1 << n) - 1
        self._full_mask = full

        # Root the raw graph at the leaf labelled 1 and collect, for every
        # non-root vertex, the leaf mask of its subtree; that mask is one
        # side of the bipartition of the edge towards the parent.
        vertex_of_label = {lab: v for v, lab in leaf_labels.items()}
        root0 = vertex_of_label[1]
        order = [root0]
        parent0: dict[int, int | None] = {root0: None}
        for v in order:
            for u in adj[v]:
                if u not in parent0:
                    parent0[u] = v
                    order.append(u)
        below = {v: (1 << (leaf_labels[v] - 1)) if v in leaf_labels else 0 for v in order}
        for v in reversed(order[1:]):
            below[parent0[v]] |= below[v]

        def labels_of(mask: int) -> tuple[int, ...]:
            return tuple(i + 1 for i in range(n) if (mask >> i) & 1)

        raw_edges = []          # (orig_u, orig_v, canonical side mask)
        incident: dict[int, list] = {v: [] for v in adj}
        for v in order[1:]:
            mask = below[v]
            other = full ^ mask
            side = mask if (mask.bit_count(), labels_of(mask)) <= (other.bit_count(), labels_of(other)) else other
            raw_edges.append((parent0[v], v, side))
            key = (side.bit_count(), labels_of(side))
            incident[parent0[v]].append(key)
            incident[v].append(key)

        # Canonical vertex numbering: leaves by label, then inner vertices
        # sorted by their incident-edge signature.
        new_index = {v: leaf_labels[v] - 1 for v in leaf_labels}
        inner = sorted((v for v in adj if v not in leaf_labels), key=lambda v: sorted(incident[v]))
        for i, v in enumerate(inner):
            new_index[v] = n + i

        edges = sorted(
            ((side.bit_count(), labels_of(side)), new_index[u], new_index[v], side)
            for u, v, side in raw_edges
        )
        self._edge_ids = tuple(EdgeId(key[1]) for key, _, _, _ in edges)
        self._side_masks = tuple(side for _, _, _, side in edges)
        self._edge_ends = tuple((u, v) for _, u, v, _ in edges)
        self._edge_pos = {eid: i for i, eid in enumerate(self._edge_ids)}
        self._split_key = frozenset(self._side_masks)

        nbrs: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
        for i, (_, u, v, _) in enumerate(edges):
            nbrs[u].append((v, i))
            nbrs[v].append((u, i))
        self._nbrs = tuple(tuple(sorted(lst)) for lst in nbrs)

        # Rooted orientation at vertex 0 (the leaf labelled 1), reused by
        # the cut dynamic programs and the oracle's contraction order.
        parent = [-1] * num_vertices
        parent_edge = [-1] * num_vertices
        bfs = [0]
        visited = [False] * num_vertices
        visited[0] = True
        for v in bfs:
            for u, ei in self._nbrs[v]:
                if not visited[u]:
                    visited[u] = True
                    parent[u] = v
                    parent_edge[u] = ei
                    bfs.append(u)
        children: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
        for v in bfs[1:]:
            children[parent[v]].append((v, parent_edge[v]))
        self._parent = tuple(parent)
        self._parent_edge = tuple(parent_edge)
        self._children = tuple(tuple(c) for c in children)
        self._postorder = tuple(reversed(bfs))
        self._pair_paths = None

    # -- basic queries -------------------------------------------------

    @property
    def leaves(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def edges(self) -> tuple[EdgeId, ...]:
        """All edges, sorted by canonical key."""
        return self._edge_ids

    def resolve_edge(self, edge: EdgeId) -> EdgeId:
        """Canonical id of the edge, accepting either side of its bipartition."""
        if edge in self._edge_pos:
            return edge
        side = set(edge.labels)
        if side <= self.leaves and len(side) < self.n:
            other = EdgeId(self.leaves - side)
            if other in self._edge_pos:
                return other
        raise ValueError(f"edge {edge} does not belong to this tree")

    def has_edge(self, edge: EdgeId) -> bool:
        try:
            self.resolve_edge(edge)
        except ValueError:
            return False
        return True

    def leaves_left_of(self, edge: EdgeId) -> frozenset[int]:
        """The canonical-key side of the edge's leaf bipartition."""
        pos = self._edge_pos[self.resolve_edge(edge)]
        return self.labels_of_mask(self._side_masks[pos])

    def mask_of(self, labels: Iterable[int]) -> int:
        mask = 0
        for lab in labels:
            if not 1 <= lab <= self.n:
                raise ValueError(f"unknown leaf label {lab}")
            mask |= 1 << (lab - 1)
        return mask

    def labels_of_mask(self, mask: int) -> frozenset[int]:
        return frozenset(i + 1 for i in range(self.n) if (mask >> i) & 1)

    def side_mask(self, edge_index: int) -> int:
        return self._side_masks[edge_index]

    def pair_path_masks(self) -> tuple[tuple[int, ...], ...]:
        """pair_path_masks()[a][b]: edge bitmask of the leaf-(a+1)..(b+1) path."""
        if self._pair_paths is None:
            root_path = [0] * self.num_vertices
            for v in reversed(self._postorder[:-1]):
                root_path[v] = root_path[self._parent[v]] ^ (1 << self._parent_edge[v])
            self._pair_paths = tuple(
                tuple(root_path[a] ^ root_path[b] for b in range(self.n)) for a in range(self.n)
            )
        return self._pair_paths

    # -- value semantics -----------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Tree) and self.n == other.n and self._split_key == other._split_key

    def __hash__(self) -> int:
        return hash((self.n, self._split_key))

    def __repr__(self) -> str:
        return f"Tree({self.serialize()!r})"

    # -- serialisation ---------------------------------------------------

    def serialize(self) -> str:
        """Canonical text form, rooted on the least edge (leaf 1's edge)."""
        if self.n == 2:
            return "(1,2)"

        def render(v: int, parent: int) -> tuple[int, str]:
            if v < self.n:
                return v + 1, str(v + 1)
            parts = sorted(render(u, v) for u, _ in self._nbrs[v] if u != parent)
            return parts[0][0], f"({parts[0][1]},{parts[1][1]})"

        inner_end = self._nbrs[0][0][0]
        _, body = render(inner_end, 0)
        return f"(1,{body})"


def parse_tree(text: str) -> Tree:
    """Parse a fully parenthesised binary expression such as ``((1,2),(3,4))``.

    The implied degree-2 root is suppressed, so the result is unrooted and
    the root edge survives as an ordinary edge.
    """
    s = "".join(text.split())
    counter = itertools.count()
    adj: dict[int, set[int]] = {}
    labels: dict[int, int] = {}

    def new_vertex() -> int:
        v = next(counter)
        adj[v] = set()
        return v

    def parse_expr(i: int) -> tuple[int, int]:
        if i >= len(s):
            raise TreeParseError("unexpected end of input")
        if s[i] == "(":
            left, i = parse_expr(i + 1)
            if i >= len(s) or s[i] != ",":
                raise TreeParseError(f"expected ',' at position {i}")
            right, i = parse_expr(i + 1)
            if i >= len(s) or s[i] != ")":
                raise TreeParseError(f"unbalanced parentheses at position {i}")
            v = new_vertex()
            adj[v].add(left)
            adj[left].add(v)
            adj[v].add(right)
            adj[right].add(v)
            return v, i + 1
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i:
            raise TreeParseError(f"expected a leaf label at position {i}")
        v = new_vertex()
        labels[v] = int(s[i:j])
        return v, j

    if not s:
        raise TreeParseError("empty input")
    root, end = parse_expr(0)
    if end != len(s):
        raise TreeParseError(f"trailing characters after position {end}")
    if root in labels:
        raise TreeParseError("a tree needs at least 2 leaves")
    a, b = adj.pop(root)
    adj[a].discard(root)
    adj[b].discard(root)
    adj[a].add(b)
    adj[b].add(a)
    return Tree(adj, labels)


def build_train_track(n: int) -> Tree:
    """Caterpillar tree: every prefix {1..j} is an edge split."""
    if n < 2:
        raise ValueError("need at least 2 leaves")
    if n == 2:
        return Tree({0: {1}, 1: {0}}, {0: 1, 1: 2})
    # leaves 0..n-1 carry labels 1..n; spine vertices n..2n-3
    adj: dict[int, set[int]] = {v: set() for v in range(2 * n - 2)}
    labels = {i: i + 1 for i in range(n)}

    def link(u: int, v: int) -> None:
        adj[u].add(v)
        adj[v].add(u)

    spine = list(range(n, 2 * n - 2))
    link(0, spine[0])
    link(n - 1, spine[-1])
    for i, v in enumerate(spine):
        link(i + 1, v)
        if i + 1 < len(spine):
            link(v, spine[i + 1])
    return Tree(adj, labels)


def build_almost_perfect_binary(n: int) -> Tree:
    """Deepest tree on n leaves: a perfect tree with a partial last row.

    Take the perfect binary tree on 2**floor(log2 n) leaves and split its
    leftmost n - 2**floor(log2 n) leaves into cherries; label the leaves
    1..n left to right.  For n a power of two this is the perfect tree.
    """
    if n < 2:
        raise ValueError("need at least 2 leaves")
    base = 1 << (n.bit_length() - 1)
    extra = n - base

    def expr(lo: int, hi: int) -> str:
        if lo == hi:
            if lo <= extra:
                return f"({2 * lo - 1},{2 * lo})"
            return str(lo + extra)
        mid = (lo + hi) // 2
        return f"({expr(lo, mid)},{expr(mid + 1, hi)})"

    return parse_tree(expr(1, base))


def relabel(tree: Tree, perm: Mapping[int, int] | Sequence[int]) -> Tree:
    """Same shape, leaf carrying label i now carries perm(i)."""
    if not isinstance(perm, Mapping):
        perm = {i + 1: lab for i, lab in enumerate(perm)}
    if sorted(perm.keys()) != list(range(1, tree.n + 1)) or sorted(perm.values()) != list(
        range(1, tree.n + 1)
    ):
        raise ValueError("perm must be a bijection on 1..n")
    adj = {v: {u for u, _ in tree._nbrs[v]} for v in range(tree.num_vertices)}
    labels = {v: perm[v + 1] for v in range(tree.n)}
    return Tree(adj, labels)


def complement(tree: Tree, a: Iterable[int]) -> frozenset[int]:
    """Leaf labels of ``tree`` not in ``a``."""
    return tree.labels_of_mask(tree._full_mask ^ tree.mask_of(a))


# -- tree generation ------------------------------------------------------


def _adjacency_and_labels(tree: Tree) -> tuple[dict[int, set[int]], dict[int, int]]:
    adj = {v: {u for u, _ in tree._nbrs[v]} for v in range(tree.num_vertices)}
    labels = {v: v + 1 for v in range(tree.n)}
    return adj, labels


def _insert_leaf(tree: Tree, edge_index: int, label: int) -> Tree:
    """New tree with an extra leaf attached in the middle of an edge."""
    adj, labels = _adjacency_and_labels(tree)
    u, v = tree._edge_ends[edge_index]
    mid = tree.num_vertices
    leaf = tree.num_vertices + 1
    adj[u].remove(v)
    adj[v].remove(u)
    adj[mid] = {u, v, leaf}
    adj[u].add(mid)
    adj[v].add(mid)
    adj[leaf] = {mid}
    labels[leaf] = label
    return Tree(adj, labels)


def all_binary_trees(n: int) -> Iterator[Tree]:
    """All (2n-5)!! leaf-labelled unrooted binary trees, deterministically."""
    if n < 2:
        raise ValueError("need at least 2 leaves")
    if n == 2:
        yield build_train_track(2)
        return
    for smaller in all_binary_trees(n - 1):
        for i in range(len(smaller.edges())):
            yield _insert_leaf(smaller, i, n)


def _shape_signature(tree: Tree) -> str:
    """Canonical unlabeled form: minimum over all edge rootings."""

    def render(v: int, parent: int) -> str:
        if v < tree.n:
            return "L"
        parts = sorted(render(u, v) for u, _ in tree._nbrs[v] if u != parent)
        return "(" + "".join(parts) + ")"

    best = None
    for a in range(tree.num_vertices):
        for b, _ in tree._nbrs[a]:
            s = "(" + "".join(sorted((render(a, b), render(b, a)))) + ")"
            if best is None or s < best:
                best = s
    return best


def tree_shapes(n: int) -> list[Tree]:
    """One representative per unlabeled shape with n leaves."""
    if n < 2:
        raise ValueError("need at least 2 leaves")
    reps = [build_train_track(2)]
    for k in range(3, n + 1):
        seen: dict[str, Tree] = {}
        for rep in reps:
            for i in range(len(rep.edges())):
                candidate = _insert_leaf(rep, i, k)
                sig = _shape_signature(candidate)
                if sig not in seen:
                    seen[sig] = candidate
        reps = [seen[sig] for sig in sorted(seen)]
    return reps


def random_binary_tree(n: int, seed: int = 0, rng: CounterRng | None = None) -> Tree:
    """Uniform-ish random labelled tree by random leaf insertion."""
    if n < 2:
        raise ValueError("need at least 2 leaves")
    if rng is None:
        rng = CounterRng(seed)
    tree = build_train_track(2)
    for label in range(3, n + 1):
        tree = _insert_leaf(tree, rng.randbelow(len(tree.edges())), label)
    return tree
