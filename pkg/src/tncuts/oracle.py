"""Exact rank oracle: random tensors from a model over a prime field.

Sampling assigns every inner vertex a random core (one axis per incident
edge) and every leaf a random matrix into its physical space, then
contracts leaf-to-root.  All arithmetic is exact in GF(p), so flattening
ranks are true ranks with no thresholds; a large prime stands in for
genericity with failure probability on the order of (matrix size)/p.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable

import numpy as np

from .fieldmath import matmul_mod, rank_mod, validate_prime
from .models import TnsModel
from .rng import CounterRng, derive_seed

DEFAULT_PRIME = (1 << 31) - 1
SIZE_CAP = 1 << 24


class SizeCapError(RuntimeError):
    """A dense tensor or core would exceed the oracle's size cap."""


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Dense multi-index array over GF(p), axes ordered by leaf label."""

    data: np.ndarray
    p: int

    def __post_init__(self):
        if self.data.dtype != np.int64:
            raise ValueError("tensor entries must be int64 residues")
        if self.data.size and (self.data.min() < 0 or self.data.max() >= self.p):
            raise ValueError("tensor entries must lie in [0, p)")

    @property
    def shape(self) -> tuple[int, ...]:
        return self.data.shape

    @property
    def n(self) -> int:
        return self.data.ndim

    def is_zero(self) -> bool:
        return not self.data.any()

    def dump_text(self) -> str:
        """Debug dump: shape and prime, then one row per last-axis slice."""
        lines = [f"shape {' '.join(map(str, self.shape))} p {self.p}"]
        flat = self.data.reshape(-1, self.shape[-1])
        for row in flat:
            lines.append(" ".join(map(str, row)))
        return "\n".join(lines) + "\n"


def _bond_extents(model: TnsModel) -> list[int]:
    tree = model.tree
    extents = []
    for i, eid in enumerate(tree.edges()):
        u, v = tree._edge_ends[i]
        extent = model.f[eid]
        for end in (u, v):
            if end < tree.n:
                extent = min(extent, model.dims[end + 1])
        extents.append(extent)
    return extents


def sample_tns_tensor(model: TnsModel, seed: int = 0, p: int = DEFAULT_PRIME) -> DenseTensor:
    """Random tensor of the model, deterministic in (model, seed, p).

    Cores are drawn for inner vertices in canonical order, then leaf
    matrices in label order; the draw order is part of the frozen scheme.
    """
    validate_prime(p)
    tree = model.tree
    n = tree.n
    total = prod(model.shape())
    if total > SIZE_CAP:
        raise SizeCapError(f"dense tensor of {total} entries exceeds the cap of {SIZE_CAP}")
    extents = _bond_extents(model)
    rng = CounterRng(seed)

    incident: list[list[int]] = [[] for _ in range(tree.num_vertices)]
    for i, (u, v) in enumerate(tree._edge_ends):
        incident[u].append(i)
        incident[v].append(i)

    cores: dict[int, np.ndarray] = {}
    axes: dict[int, list[int]] = {}
    for v in range(n, tree.num_vertices):
        edge_idx = sorted(incident[v])
        shape = tuple(extents[i] for i in edge_idx)
        size = prod(shape)
        if size > SIZE_CAP:
            raise SizeCapError(f"core of {size} entries exceeds the cap of {SIZE_CAP}")
        cores[v] = rng.residues(size, p).reshape(shape)
        axes[v] = edge_idx
    leaf_mats = {}
    for leaf in range(n):
        ei = incident[leaf][0]
        leaf_mats[leaf] = rng.residues(model.dims[leaf + 1] * extents[ei], p).reshape(
            model.dims[leaf + 1], extents[ei]
        )

    if n == 2:
        data = matmul_mod(leaf_mats[0], leaf_mats[1].T.copy(), p)
        return DenseTensor(data, p)

    def contract_bond(arr, desc, pos, other, odesc):
        """Contract axis ``pos`` of arr with axis 0 of other; other's
        remaining axes are appended.  desc entries: ("e", i) open bond or
        ("l", label)."""
        arr = np.moveaxis(arr, pos, arr.ndim - 1)
        left_shape = arr.shape[:-1]
        bond = arr.shape[-1]
        rest = other.shape[1:]
        out = matmul_mod(arr.reshape(-1, bond), other.reshape(bond, -1), p)
        out = out.reshape(left_shape + rest)
        new_desc = [d for j, d in enumerate(desc) if j != pos] + list(odesc)
        return out, new_desc

    def build(v: int) -> tuple[np.ndarray, list]:
        # returns the subtree tensor with the bond towards the parent open
        arr = cores[v]
        desc = [("e", i) for i in axes[v]]
        for child, ei in tree._children[v]:
            pos = desc.index(("e", ei))
            if child < n:
                sub = leaf_mats[child].T.copy()  # bond first
                arr, desc = contract_bond(arr, desc, pos, sub, [("l", child + 1)])
            else:
                sub, sdesc = build(child)
                spos = sdesc.index(("e", ei))
                sub = np.ascontiguousarray(np.moveaxis(sub, spos, 0))
                odesc = [d for j, d in enumerate(sdesc) if j != spos]
                arr, desc = contract_bond(arr, desc, pos, sub, odesc)
        return arr, desc

    root_inner = tree._children[0][0][0]
    leaf1_edge = tree._parent_edge[root_inner]
    arr, desc = build(root_inner)
    pos = desc.index(("e", leaf1_edge))
    arr, desc = contract_bond(arr, desc, pos, leaf_mats[0].T.copy(), [("l", 1)])
    order = sorted(range(len(desc)), key=lambda j: desc[j][1])
    data = np.ascontiguousarray(np.transpose(arr, order))
    return DenseTensor(data, p)


def flattening_rank(t: DenseTensor, a: Iterable[int]) -> int:
    """Exact rank of the matrix with A-leaf indices as rows."""
    labels = set(a)
    for lab in labels:
        if not 1 <= lab <= t.n:
            raise ValueError(f"unknown leaf label {lab}")
    if not labels or len(labels) == t.n:
        return 0 if t.is_zero() else 1
    rows = sorted(lab - 1 for lab in labels)
    cols = [i for i in range(t.n) if i + 1 not in labels]
    mat = np.transpose(t.data, rows + cols).reshape(
        prod(t.shape[i] for i in rows), -1
    )
    return rank_mod(mat, t.p)


def estimate_generic_rank(
    model: TnsModel,
    a: Iterable[int],
    trials: int = 3,
    seed: int = 0,
    p: int = DEFAULT_PRIME,
) -> int:
    """Max flattening rank over independently seeded samples.

    A lower bound for the generic rank that meets it with overwhelming
    probability; trial i uses the derived seed ``derive_seed(seed, i)``.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    labels = frozenset(a)
    best = 0
    for i in range(trials):
        t = sample_tns_tensor(model, derive_seed(seed, i), p)
        best = max(best, flattening_rank(t, labels))
    return best


def check_membership(t: DenseTensor, model: TnsModel) -> bool:
    """Edge characterisation: every edge flattening rank within its bond."""
    if t.shape != model.shape():
        raise ValueError(f"tensor shape {t.shape} does not match model dims {model.shape()}")
    tree = model.tree
    return all(
        flattening_rank(t, tree.leaves_left_of(eid)) <= model.f[eid] for eid in tree.edges()
    )


def kron(t1: DenseTensor, t2: DenseTensor) -> DenseTensor:
    """Outer product; t2's leaves follow t1's, shifted by t1.n.

    Flattening ranks multiply across the two factors.
    """
    if t1.p != t2.p:
        raise ValueError("tensors must share the same prime")
    if t1.data.size * t2.data.size > SIZE_CAP:
        raise SizeCapError("outer product exceeds the size cap")
    data = np.multiply.outer(t1.data, t2.data) % t1.p
    return DenseTensor(data, t1.p)
