"""Tree tensor-network models given by per-edge bond bounds.

A model is a tree, a bond function f >= 1 on its edges, and a physical
dimension per leaf.  The generic flattening rank of the model at a leaf
subset A is governed by the cheapest monochromatic cut for A, which is
what predict_rank computes; optimalize shrinks f to the smallest function
with the same reachable set of tensors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Iterable, Mapping

from .cuts import min_product_cut
from .trees import EdgeId, Tree, parse_tree


@dataclass(frozen=True, eq=False)
class TnsModel:
    tree: Tree
    f: dict[EdgeId, int]
    dims: dict[int, int]

    def __post_init__(self):
        edges = set(self.tree.edges())
        if set(self.f) != edges:
            raise ValueError("bond function must cover exactly the tree's edges")
        if any(v < 1 for v in self.f.values()):
            raise ValueError("bond function must be >= 1 everywhere")
        if set(self.dims) != set(range(1, self.tree.n + 1)):
            raise ValueError("dims must cover exactly the leaves 1..n")
        if any(d < 1 for d in self.dims.values()):
            raise ValueError("dims must be >= 1 everywhere")

    @classmethod
    def constant(cls, tree: Tree, r: int, dims: Mapping[int, int] | int | None = None) -> "TnsModel":
        """Model with f identically r; dims default to r on every leaf."""
        if dims is None:
            dims = r
        if isinstance(dims, int):
            dims = {lab: dims for lab in range(1, tree.n + 1)}
        return cls(tree, {e: r for e in tree.edges()}, dict(dims))

    def is_constant(self) -> int | None:
        """The constant value of f, or None if f is not constant."""
        values = set(self.f.values())
        return values.pop() if len(values) == 1 else None

    def shape(self) -> tuple[int, ...]:
        return tuple(self.dims[lab] for lab in range(1, self.tree.n + 1))

    def to_json_dict(self) -> dict:
        return {
            "tree": self.tree.serialize(),
            "f": {e.key: self.f[e] for e in self.tree.edges()},
            "dims": {str(lab): self.dims[lab] for lab in range(1, self.tree.n + 1)},
        }


def model_from_json_dict(data: Mapping) -> TnsModel:
    """Build a model from the JSON object form.

    "f" may be a scalar (constant function); "dims" may be omitted when f
    is constant, defaulting every leaf to that constant.
    """
    try:
        tree = parse_tree(data["tree"])
    except KeyError:
        raise ValueError('model file needs a "tree" entry') from None
    raw_f = data.get("f")
    if raw_f is None:
        raise ValueError('model file needs an "f" entry')
    if isinstance(raw_f, int):
        f = {e: raw_f for e in tree.edges()}
    else:
        f = {}
        for key, value in raw_f.items():
            try:
                eid = tree.resolve_edge(EdgeId.from_key(key))
            except ValueError:
                raise ValueError(f"edge key {key!r} does not name an edge of the tree") from None
            if not isinstance(value, int):
                raise ValueError(f"bond value for {key!r} must be an integer")
            f[eid] = value
    raw_dims = data.get("dims")
    if raw_dims is None:
        values = set(f.values())
        if len(values) != 1:
            raise ValueError('"dims" may only be omitted when f is constant')
        constant = values.pop()
        dims = {lab: constant for lab in range(1, tree.n + 1)}
    else:
        dims = {}
        for key, value in raw_dims.items():
            dims[int(key)] = value
    return TnsModel(tree, f, dims)


def load_model(path) -> TnsModel:
    with open(path, "r", encoding="utf-8") as fh:
        return model_from_json_dict(json.load(fh))


# -- rank prediction ---------------------------------------------------------


@dataclass(frozen=True)
class RankPrediction:
    """Predicted flattening rank: exact generic value or an upper bound."""

    value: int
    exact: bool
    witness: frozenset[EdgeId]


def predict_rank(model: TnsModel, a: Iterable[int]) -> RankPrediction:
    """Flattening-rank prediction for the leaf subset ``a``.

    Exact (generic) when f is constant with value at most every leaf
    dimension; otherwise the value is an upper bound for every tensor in
    the model.
    """
    amask = model.tree.mask_of(a)
    if amask == 0 or amask == model.tree._full_mask:
        return RankPrediction(1, True, frozenset())
    cut = min_product_cut(model.tree, model.tree.labels_of_mask(amask), model.f)
    r = model.is_constant()
    exact = r is not None and all(r <= d for d in model.dims.values())
    return RankPrediction(cut.product, exact, cut.witness)


# -- optimal bond function -----------------------------------------------------


def optimalize(model: TnsModel) -> TnsModel:
    """Smallest pointwise bond function defining the same set of tensors.

    Fixed point of clamping every edge value by the cheapest monochromatic
    cut for its own bipartition and by the dimension products of the two
    sides.  Idempotent, never increases f, never drops below 1.
    """
    tree = model.tree
    f = dict(model.f)
    dim_bound = {}
    for eid in tree.edges():
        side = tree.leaves_left_of(eid)
        other = tree.leaves - side
        dim_bound[eid] = min(
            prod(model.dims[lab] for lab in side),
            prod(model.dims[lab] for lab in other),
        )
    changed = True
    while changed:
        changed = False
        for eid in tree.edges():
            best = min_product_cut(tree, tree.leaves_left_of(eid), f).product
            new = min(f[eid], best, dim_bound[eid])
            if new < f[eid]:
                f[eid] = new
                changed = True
    return TnsModel(tree, f, dict(model.dims))


# -- model comparison -----------------------------------------------------------


@dataclass(frozen=True)
class EdgeCheck:
    edge: EdgeId
    required: int
    actual: int
    ok: bool


@dataclass(frozen=True)
class ComparisonReport:
    """Per-edge necessary condition for one model's tensors to fit in another.

    ``passed`` means every bond of the second model meets the cut bound
    induced by the first; that is necessary for inclusion, never sufficient.
    A failing edge is a proof of non-inclusion.
    """

    edges: tuple[EdgeCheck, ...]
    passed: bool
    witness: EdgeId | None

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "witness": self.witness.key if self.witness else None,
            "note": "necessary condition for inclusion of the first model in the second; passing does not prove inclusion",
            "edges": [
                {"edge": c.edge.key, "required": c.required, "actual": c.actual, "ok": c.ok}
                for c in self.edges
            ],
        }


def compare_models(m1: TnsModel, m2: TnsModel) -> ComparisonReport:
    """Check, edge by edge, whether m2's bonds can possibly contain m1.

    For each edge of m2's tree the required bond is the min-product cut in
    m1 for the leaf subset that the edge cuts out of m2.
    """
    if m1.tree.n != m2.tree.n:
        raise ValueError("models must share the same leaf set")
    if m1.dims != m2.dims:
        raise ValueError("models must have identical leaf dimensions")
    checks = []
    witness = None
    for eid in m2.tree.edges():
        subset = m2.tree.leaves_left_of(eid)
        required = min_product_cut(m1.tree, subset, m1.f).product
        actual = m2.f[eid]
        ok = actual >= required
        if not ok and witness is None:
            witness = eid
        checks.append(EdgeCheck(eid, required, actual, ok))
    return ComparisonReport(tuple(checks), witness is None, witness)


# -- hard subsets (exponential rank growth) --------------------------------------


def construct_hard_subset(tree: Tree) -> frozenset[int]:
    """Leaf subset whose minimal monochromatic cut has >= floor(n/2) edges.

    Greedy cherry elimination: repeatedly take the two leaves hanging off a
    common vertex (after pruning dead branches), put the smaller label in A
    and the other outside, and delete both.  Cherries are processed in
    ascending order of their smaller label.
    """
    if tree.n < 2:
        raise ValueError("need at least 2 leaves")
    adj = {v: {u for u, _ in tree._nbrs[v]} for v in range(tree.num_vertices)}
    label = {v: v + 1 for v in range(tree.n)}
    chosen: set[int] = set()

    def cleanup() -> None:
        # drop unlabelled twigs, splice unlabelled degree-2 vertices
        again = True
        while again:
            again = False
            for v in list(adj):
                if v in label:
                    continue
                if len(adj[v]) <= 1:
                    for u in adj.pop(v):
                        adj[u].discard(v)
                    again = True
                elif len(adj[v]) == 2:
                    a, b = adj.pop(v)
                    adj[a].discard(v)
                    adj[b].discard(v)
                    adj[a].add(b)
                    adj[b].add(a)
                    again = True

    while len(label) >= 2:
        cleanup()
        cherry = None  # (small_label, big_label, small_vertex, big_vertex)
        if len(label) == 2:
            (v1, l1), (v2, l2) = sorted(label.items(), key=lambda kv: kv[1])
            cherry = (l1, l2, v1, v2)
        else:
            for v in adj:
                if v in label:
                    continue
                leaf_nbrs = sorted((label[u], u) for u in adj[v] if u in label)
                if len(leaf_nbrs) >= 2:
                    (l1, v1), (l2, v2) = leaf_nbrs[0], leaf_nbrs[1]
                    if cherry is None or l1 < cherry[0]:
                        cherry = (l1, l2, v1, v2)
        if cherry is None:
            raise AssertionError("a pruned binary tree always contains a cherry")
        l1, _, v1, v2 = cherry
        chosen.add(l1)
        for v in (v1, v2):
            for u in adj.pop(v):
                adj[u].discard(v)
            del label[v]
    return frozenset(chosen)
