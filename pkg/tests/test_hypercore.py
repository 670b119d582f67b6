import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperpart import (
    Partition,
    VertexPermutation,
    are_isomorphic,
    build_partition,
    complete_hypergraph,
    faces,
    gamma_abstract,
    make_hypergraph,
    verify_partition,
)
from hyperpart.hypercore import HypergraphError


def test_make_hypergraph_figure2():
    h = make_hypergraph(6, 3, [[1, 2, 6], [1, 3, 5], [2, 3, 4]])
    assert len(h) == 3
    assert h.edges == ((1, 2, 6), (1, 3, 5), (2, 3, 4))


def test_make_hypergraph_empty():
    h = make_hypergraph(4, 3, [])
    assert h.n == 4 and h.r == 3 and h.edges == ()


def test_make_hypergraph_canonicalizes():
    h = make_hypergraph(5, 3, [[3, 1, 2], [1, 2, 3], [5, 4, 1]])
    assert h.edges == ((1, 2, 3), (1, 4, 5))


@pytest.mark.parametrize("edges, msg", [
    ([[1, 2]], "arity"),
    ([[1, 1, 2]], "repeats"),
    ([[1, 2, 7]], "outside"),
    ([[0, 1, 2]], "outside"),
])
def test_make_hypergraph_rejects(edges, msg):
    with pytest.raises(HypergraphError, match=msg):
        make_hypergraph(6, 3, edges)


def test_make_hypergraph_bad_sizes():
    with pytest.raises(HypergraphError):
        make_hypergraph(2, 3, [])


edge_lists = st.integers(1, 4).flatmap(
    lambda r: st.tuples(
        st.just(r),
        st.lists(st.lists(st.integers(1, 7), min_size=r, max_size=r, unique=True), max_size=12),
    )
)


@given(edge_lists)
def test_canonicalization_idempotent(data):
    r, edges = data
    h = make_hypergraph(7, r, edges)
    again = make_hypergraph(h.n, h.r, h.edges)
    assert again == h
    assert list(h.edges) == sorted(set(h.edges))


def test_complete_hypergraph():
    assert complete_hypergraph(4, 3).edges == ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4))
    assert len(complete_hypergraph(6, 3)) == 20
    for r in range(1, 6):
        assert complete_hypergraph(r, r).edges == (tuple(range(1, r + 1)),)
    with pytest.raises(HypergraphError):
        complete_hypergraph(3, 4)


@pytest.mark.parametrize("n, r", [(4, 3), (6, 3), (7, 4), (5, 1)])
def test_complete_face_counts(n, r):
    h = complete_hypergraph(n, r)
    for s in range(1, r + 1):
        assert len(faces(h, s)) == comb(n, s)


def test_faces_examples(figure2, k4):
    assert faces(k4, 2).faces == tuple(itertools.combinations(range(1, 5), 2))
    assert len(faces(build_partition(3, 2).parts[0], 2)) == 15
    assert set(faces(figure2, 2)) == {(1, 2), (1, 6), (2, 6), (1, 3), (1, 5), (3, 5),
                                      (2, 3), (2, 4), (3, 4)}
    assert faces(figure2, 3).faces == figure2.edges
    with pytest.raises(HypergraphError):
        faces(figure2, 4)


@given(edge_lists)
def test_faces_extend_upward(data):
    r, edges = data
    h = make_hypergraph(7, r, edges)
    for s in range(1, r):
        upper = set(faces(h, s + 1))
        for f in faces(h, s):
            assert any(set(f) < set(g) for g in upper)


def test_verify_partition_accepts():
    assert verify_partition(build_partition(3, 2))
    single = Partition(3, 1, (complete_hypergraph(3, 3),))
    assert verify_partition(single)
    assert verify_partition(Partition(2, 2, (complete_hypergraph(4, 2).without((1, 2)),
                                             make_hypergraph(4, 2, [[1, 2]]))))


def test_verify_partition_disjointness_witness():
    k6 = complete_hypergraph(6, 3)
    p = Partition(3, 2, (k6, make_hypergraph(6, 3, [[1, 2, 3]])))
    report = verify_partition(p)
    assert not report
    assert any("disjointness" in v and "(1, 2, 3)" in v for v in report.violations)


def test_verify_partition_coverage_and_vertex_set():
    k6 = complete_hypergraph(6, 3)
    report = verify_partition(Partition(3, 2, (k6.without((4, 5, 6)), make_hypergraph(6, 3, []))))
    assert not report and any("coverage" in v and "(4, 5, 6)" in v for v in report.violations)
    report = verify_partition(Partition(3, 2, (k6, make_hypergraph(5, 3, []))))
    assert not report and any("vertex-set" in v for v in report.violations)


def test_isomorphism_identity():
    h = gamma_abstract(3, 6, 0)
    perm = are_isomorphic(h, h)
    assert perm is not None and perm.apply(h) == h


def test_isomorphism_shift_example():
    a, b = gamma_abstract(2, 4, 0), gamma_abstract(2, 4, 2)
    perm = are_isomorphic(a, b)
    assert perm is not None and perm.apply(a).edges == b.edges
    shift = VertexPermutation((2, 3, 4, 1))
    assert shift.apply(a).edges == b.edges


def test_isomorphism_negative_exhaustive():
    a, b = gamma_abstract(3, 6, 0), gamma_abstract(3, 6, 2)
    assert are_isomorphic(a, b) is None
    assert are_isomorphic(a, b, prune=False) is None
    # independent brute force over all 720 relabelings
    target = set(b.edges)
    hits = [p for p in itertools.permutations(range(1, 7))
            if {tuple(sorted(p[v - 1] for v in e)) for e in a.edges} == target]
    assert hits == []


def test_isomorphism_cap():
    h = complete_hypergraph(11, 2)
    with pytest.raises(HypergraphError, match="cap"):
        are_isomorphic(h, h)
    assert are_isomorphic(h, h, cap=11) is not None


@st.composite
def hypergraph_pairs(draw):
    n = draw(st.integers(3, 6))
    r = draw(st.integers(1, 3))
    pool = list(itertools.combinations(range(1, n + 1), r))
    edges = draw(st.lists(st.sampled_from(pool), unique=True, max_size=8))
    a = make_hypergraph(n, r, edges)
    if draw(st.booleans()):
        image = draw(st.permutations(range(1, n + 1)))
        return a, VertexPermutation(tuple(image)).apply(a)
    other = draw(st.lists(st.sampled_from(pool), unique=True, max_size=8))
    return a, make_hypergraph(n, r, other)


@given(hypergraph_pairs())
def test_isomorphism_symmetric_and_correct(pair):
    a, b = pair
    ab, ba = are_isomorphic(a, b), are_isomorphic(b, a)
    assert (ab is None) == (ba is None)
    assert (ab is None) == (are_isomorphic(a, b, prune=False) is None)
    if ab is not None:
        assert ab.apply(a) == b


def test_vertex_permutation_rejects_non_bijection():
    with pytest.raises(HypergraphError):
        VertexPermutation((1, 1, 2))
    p = VertexPermutation((3, 1, 2))
    assert p.inverse().image == (2, 3, 1)
    assert p(1) == 3
