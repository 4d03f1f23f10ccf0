"""Tree parsing, builders, and canonical edge identifiers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tncuts import (
    EdgeId,
    Tree,
    TreeParseError,
    all_binary_trees,
    build_almost_perfect_binary,
    build_train_track,
    complement,
    parse_tree,
    random_binary_tree,
    relabel,
    tree_shapes,
)

CAT4 = "((1,2),(3,4))"


def split_set(tree: Tree) -> set[tuple[int, ...]]:
    return {e.labels for e in tree.edges()}


def test_parse_cat4_splits():
    tree = parse_tree(CAT4)
    assert tree.n == 4
    assert split_set(tree) == {(1,), (2,), (3,), (4,), (1, 2)}


def test_parse_two_leaves():
    tree = parse_tree("(1,2)")
    assert tree.n == 2
    assert split_set(tree) == {(1,)}


def test_parse_whitespace_insignificant():
    assert parse_tree(" ( (1, 2) ,\n(3,4) ) ") == parse_tree(CAT4)


@pytest.mark.parametrize(
    "text",
    ["((1,2)", "(1,2))", "((1,2),(3,4)", "", "(1)", "((1,2),)", "(1,(2,))"],
)
def test_parse_malformed(text):
    with pytest.raises(TreeParseError):
        parse_tree(text)


def test_parse_single_leaf_rejected():
    with pytest.raises(ValueError):
        parse_tree("7")


@pytest.mark.parametrize("text", ["((1,2),(3,3))", "((1,2),(4,5))", "((0,1),(2,3))"])
def test_parse_bad_labels(text):
    with pytest.raises(ValueError):
        parse_tree(text)


def test_edge_counts():
    for n in range(2, 9):
        tree = build_train_track(n)
        assert len(tree.edges()) == (1 if n == 2 else 2 * n - 3)


def test_train_track_splits():
    for n in range(2, 13):
        tree = build_train_track(n)
        singles = {(i,) for i in range(1, n + 1)}
        prefixes = {tuple(range(1, j + 1)) for j in range(1, n)}
        want = set()
        for labels in singles | prefixes:
            other = tuple(sorted(set(range(1, n + 1)) - set(labels)))
            want.add(min(labels, other, key=lambda t: (len(t), t)))
        assert split_set(tree) == want


def test_train_track_small_examples():
    assert split_set(build_train_track(5)) >= {(1, 2), (4, 5)}  # {1,2,3} canonicalises to (4,5)
    assert build_train_track(2).n == 2
    assert build_train_track(4) == parse_tree(CAT4)
    with pytest.raises(ValueError):
        build_train_track(1)


def test_abt_small_shapes():
    assert build_almost_perfect_binary(4) == parse_tree(CAT4)
    assert build_almost_perfect_binary(5) == parse_tree("(((1,2),3),(4,5))")
    assert build_almost_perfect_binary(6) == parse_tree("(((1,2),(3,4)),(5,6))")
    assert build_almost_perfect_binary(8) == parse_tree("(((1,2),(3,4)),((5,6),(7,8)))")
    with pytest.raises(ValueError):
        build_almost_perfect_binary(0)


def test_leaves_left_of():
    tree = parse_tree(CAT4)
    assert tree.leaves_left_of(EdgeId([1, 2])) == {1, 2}
    assert tree.leaves_left_of(EdgeId([3])) == {3}
    tt5 = build_train_track(5)
    # the {1,2,3} bipartition canonicalises to the smaller side {4,5};
    # lookups accept either side and return the canonical one
    assert tt5.leaves_left_of(EdgeId([4, 5])) == {4, 5}
    assert tt5.leaves_left_of(EdgeId([1, 2, 3])) == {4, 5}
    assert tt5.resolve_edge(EdgeId([1, 2, 3])) == EdgeId([4, 5])
    with pytest.raises(ValueError):
        tree.leaves_left_of(EdgeId([1, 3]))
    with pytest.raises(ValueError):
        tt5.resolve_edge(EdgeId([1, 2, 9]))


def test_edge_bipartition_properties():
    for tree in (parse_tree(CAT4), build_train_track(7), build_almost_perfect_binary(9)):
        for e in tree.edges():
            side = tree.leaves_left_of(e)
            other = complement(tree, side)
            assert side and other
            assert side | other == tree.leaves
            assert not side & other


def test_relabel():
    tree = parse_tree(CAT4)
    assert relabel(tree, {1: 1, 2: 2, 3: 3, 4: 4}) == tree
    swapped = relabel(tree, {1: 1, 2: 3, 3: 2, 4: 4})
    assert (1, 3) in split_set(swapped)
    assert relabel(swapped, {1: 1, 2: 3, 3: 2, 4: 4}) == tree
    with pytest.raises(ValueError):
        relabel(tree, {1: 1, 2: 2, 3: 3, 4: 3})


def test_serialize_round_trip_canonical():
    for text in [CAT4, "(1,2)", "(((1,2),3),(4,5))"]:
        tree = parse_tree(text)
        assert parse_tree(tree.serialize()) == tree
        # canonical form is a fixed point
        assert parse_tree(tree.serialize()).serialize() == tree.serialize()


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9), st.integers(0, 2**32))
def test_serialize_round_trip_random(n, seed):
    tree = random_binary_tree(n, seed)
    assert parse_tree(tree.serialize()) == tree


def test_enumeration_counts():
    # (2n-5)!! labelled trees
    expected = {2: 1, 3: 1, 4: 3, 5: 15, 6: 105, 7: 945}
    for n, want in expected.items():
        assert sum(1 for _ in all_binary_trees(n)) == want


def test_enumeration_distinct():
    trees = list(all_binary_trees(6))
    assert len(set(trees)) == len(trees)


def test_tree_shapes_counts():
    assert [len(tree_shapes(n)) for n in range(4, 11)] == [1, 1, 2, 2, 4, 6, 11]


def test_random_tree_deterministic():
    assert random_binary_tree(10, seed=5) == random_binary_tree(10, seed=5)
    assert random_binary_tree(10, seed=5) != random_binary_tree(10, seed=6)
