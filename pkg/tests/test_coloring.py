import pytest
from hypothesis import given
from hypothesis import strategies as st

from eqforest.coloring import (FOREST, INDEPENDENT, ClassPredicate, Partition, Reason,
                               is_equitable, verify)
from eqforest.generators import complete, cycle, star
from eqforest.graph import induced_subgraph, is_forest

from conftest import graphs
from oracles import naive_classes_ok


def sizes_partition(*sizes):
    return Partition.from_classes(
        [range(sum(sizes[:i]), sum(sizes[:i + 1])) for i in range(len(sizes))], sum(sizes))


@pytest.mark.parametrize("sizes, expected", [((2, 2, 2), True), ((3, 2, 2), True),
                                             ((4, 2, 1), False), ((1, 1, 0), True),
                                             ((2, 0, 1), False)])
def test_is_equitable(sizes, expected):
    assert is_equitable(sizes_partition(*sizes)) is expected


def test_partition_rejects_bad_indices():
    with pytest.raises(ValueError):
        Partition(2, (1, 0, 2))
    with pytest.raises(ValueError):
        Partition(2, (1, 3))
    with pytest.raises(ValueError):
        Partition(0, ())


def test_verify_examples():
    assert verify(complete(4), Partition(2, (1, 1, 2, 2)), FOREST).valid
    c3 = verify(cycle(3), Partition(1, (1, 1, 1)), FOREST)
    assert not c3.valid and c3.class_violations == ((1, Reason.CYCLE),)
    # center and two leaves together: internal degree 2
    k15 = verify(star(5), Partition(2, (1, 1, 1, 2, 2, 2)), ClassPredicate.defective(2))
    assert k15.valid


def test_verify_reports_every_violation():
    g = complete(6)
    rep = verify(g, Partition(2, (1, 1, 1, 2, 2, 2)), INDEPENDENT)
    assert {c for c, _ in rep.class_violations} == {1, 2}
    rep = verify(star(4), Partition(1, (1,) * 5), ClassPredicate.defective(2))
    assert rep.class_violations == ((1, Reason.DEGREE),)
    assert not verify(cycle(4), Partition(3, (1, 1, 1, 1)), FOREST).equitable_ok


def test_verify_domain_mismatch():
    with pytest.raises(ValueError):
        verify(complete(4), Partition(2, (1, 2, 1)), FOREST)


def test_defective_needs_positive_d():
    with pytest.raises(ValueError):
        ClassPredicate.defective(0)



@given(graphs(min_n=1, max_n=9), st.data())
def test_verify_matches_naive(g, data):
    m = data.draw(st.integers(1, g.n + 1))
    labels = data.draw(st.lists(st.integers(1, m), min_size=g.n, max_size=g.n))
    d = data.draw(st.integers(1, 3))
    p = Partition(m, tuple(labels))
    for pred, kind in ((FOREST, "forest"), (INDEPENDENT, "independent"),
                       (ClassPredicate.defective(d), "defective")):
        rep = verify(g, p, pred)
        equitable, bad = naive_classes_ok(g.n, g.edges, m, labels, kind, d)
        assert rep.equitable_ok == equitable
        assert {c for c, _ in rep.class_violations} == bad


@given(graphs(min_n=1, max_n=9), st.data())
def test_predicates_are_monotone(g, data):
    m = data.draw(st.integers(1, g.n))
    labels = tuple(data.draw(st.lists(st.integers(1, m), min_size=g.n, max_size=g.n)))
    p = Partition(m, labels)
    ok = lambda pred: not verify(g, p, pred).class_violations  # noqa: E731
    if ok(INDEPENDENT):
        assert all(ok(ClassPredicate.defective(d)) for d in (1, 2, 3))
    for d in (1, 2, 3):
        if ok(ClassPredicate.defective(d)):
            assert ok(FOREST)
    assert ok(FOREST) == all(is_forest(induced_subgraph(g, c).graph) for c in p.classes())


@given(graphs(min_n=2, max_n=9), st.data())
def test_splitting_a_class_keeps_forests(g, data):
    m = data.draw(st.integers(1, g.n - 1))
    labels = list(data.draw(st.lists(st.integers(1, m), min_size=g.n, max_size=g.n)))
    before = verify(g, Partition(m, tuple(labels)), FOREST)
    target = data.draw(st.integers(1, m))
    members = [v for v in range(g.n) if labels[v] == target]
    moved = data.draw(st.sets(st.sampled_from(members))) if members else set()
    for v in moved:
        labels[v] = m + 1
    after = verify(g, Partition(m + 1, tuple(labels)), FOREST)
    if not before.class_violations:
        assert not after.class_violations
    sizes = [labels.count(c) for c in range(1, m + 2)]
    assert after.equitable_ok == (max(sizes) - min(sizes) <= 1)
