import pytest
from hypothesis import given

from conftest import all_trees, caterpillar_params, random_trees
from tree_einstein.trees import (
    CaterpillarParam,
    Tree,
    TreeError,
    build_caterpillar,
    build_named,
    canonical,
    caterpillar_param_of,
    children,
    contains_s32,
    format_edge_list,
    iter_params,
    parse_edge_list,
    path,
    predecessors,
    s32,
)

KNOWN_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]  # unlabelled trees on 1..10 vertices
TREES = all_trees(10)


def test_tree_enumerator_counts():
    assert [len(TREES[n]) for n in range(1, 11)] == KNOWN_TREE_COUNTS


def test_caterpillar_iff_no_s32():
    for n in range(2, 11):
        for edges in TREES[n]:
            t = Tree(n, edges)
            assert contains_s32(t) == (caterpillar_param_of(t) is None)


def test_invalid_trees_rejected():
    with pytest.raises(TreeError):
        Tree(3, ((0, 1), (0, 1)))
    with pytest.raises(TreeError):
        Tree(4, ((0, 1), (2, 3), (1, 0)))
    with pytest.raises(TreeError):
        CaterpillarParam((0, 2, 1))
    with pytest.raises(TreeError):
        CaterpillarParam.parse("1,a")


def test_caterpillar_layout():
    t = build_caterpillar((2, 0, 1))
    assert t.edges[:2] == ((0, 1), (1, 2))
    assert t.edges[2:] == ((0, 3), (0, 4), (2, 5))
    assert t.degrees[:3] == (3, 2, 2)


@given(caterpillar_params())
def test_param_recognition_roundtrip(a):
    p = canonical(a)
    assert caterpillar_param_of(build_caterpillar(a)) == p
    assert caterpillar_param_of(build_caterpillar(a[::-1])) == p


def test_recognition_edge_cases():
    assert caterpillar_param_of(Tree(1, ())) == CaterpillarParam((0,))
    assert caterpillar_param_of(path(2)) == CaterpillarParam((1,))
    assert caterpillar_param_of(path(6)) == CaterpillarParam((1, 0, 0, 1))
    assert caterpillar_param_of(s32()) is None


def test_children_and_predecessors():
    p = canonical((1, 0, 2))
    assert children(p) == {canonical(x) for x in [(2, 0, 2), (1, 1, 2), (1, 0, 3)]}
    # (0, 0, 2) is not a valid parameter, so only one predecessor survives
    assert predecessors(canonical((1, 0, 1))) == set()
    assert predecessors(p) == {canonical((1, 0, 1))}


def test_iter_params_counts():
    assert sum(1 for m in range(1, 7) for _ in iter_params(m, 8)) == 902
    ps = list(iter_params(4, 5))
    assert ps == sorted(ps)
    assert all(p == canonical(p.a) for p in ps)


@given(random_trees())
def test_edge_list_roundtrip(t):
    assert parse_edge_list(format_edge_list(t)) == t


def test_named_trees():
    assert build_named("star:4").edge_count == 4
    assert build_named("eta:6,3") == build_caterpillar((1, 0, 1, 0, 0, 1))
    with pytest.raises(TreeError):
        build_named("wheel:5")


@given(caterpillar_params())
def test_children_predecessors_are_inverse(a):
    p = canonical(a)
    for q in children(p):
        assert p in predecessors(q)
