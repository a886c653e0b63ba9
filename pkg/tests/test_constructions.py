from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qextremal.constructions import (InternalPath, blow_up, blow_up_partition, contract_path_to_edge,
                                     cycle, cycle_star, cycle_star_partition, extremal_by_order,
                                     find_internal_paths, g0, g0_embedding, identify, path,
                                     rotate_edge, s_nk, s_nk_plus, star, subdivide_edge)
from qextremal.graph import GraphError, max_degree
from qextremal.odd_cycle import odd_girth
from qextremal.partitions import quotient
from qextremal.search import is_isomorphic
from qextremal.spectral import perron_vector, q_index

from conftest import graphs


def test_basic_families():
    assert (cycle(7).order, cycle(7).size()) == (7, 7)
    assert (star(3).order, star(3).size()) == (4, 3)
    assert (path(1).order, path(1).size()) == (1, 0)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        star(-1)


def test_blow_up_examples():
    g = blow_up(cycle(5), [2, 1, 1, 1, 1])
    assert (g.order, g.size()) == (6, 7)
    assert is_isomorphic(blow_up(cycle(7), [1] * 7), cycle(7))
    n = 10
    assert q_index(blow_up(cycle(7), [n - 6] + [1] * 6)) > n - 4 + 1 - Fraction(3, 20)
    with pytest.raises(GraphError):
        blow_up(cycle(5), [1, 1, 1])
    with pytest.raises(GraphError):
        blow_up(cycle(5), [0, 1, 1, 1, 1])


@given(graphs(max_order=7), st.data())
@settings(max_examples=80, deadline=None)
def test_blow_up_size_formula(h, data):
    r = data.draw(st.lists(st.integers(1, 3), min_size=h.order, max_size=h.order))
    g = blow_up(h, r)
    assert g.order == sum(r)
    assert g.size() == sum(r[i] * r[j] for i, j in h.edges())
    for cell in blow_up_partition(r).cells:
        assert all(not g.has_edge(u, v) for u in cell for v in cell)


@given(graphs(max_order=7))
@settings(max_examples=80, deadline=None)
def test_identity_blow_up_is_isomorphic(h):
    assert is_isomorphic(blow_up(h, [1] * h.order), h)


def test_identify_examples():
    g = identify(cycle(5), 0, star(3), 0)
    assert (g.order, g.size()) == (8, 8)
    assert g.degree(0) == 5
    assert is_isomorphic(identify(path(2), 0, path(2), 0), path(3))
    assert max_degree(identify(cycle(7), 0, star(12 - 7), 0)) == 7
    with pytest.raises(GraphError):
        identify(cycle(5), 5, star(3), 0)


def test_cycle_star_examples():
    g = cycle_star(1, 8)
    assert (g.order, g.size()) == (8, 8)
    assert cycle_star(2, 7) == cycle(7)
    assert q_index(cycle_star(1, 10)) > 8
    with pytest.raises(GraphError):
        cycle_star(2, 6)
    p = cycle_star_partition(2, 12)
    assert quotient(cycle_star(2, 12), p).equitable


def test_s_nk_examples():
    assert is_isomorphic(s_nk(5, 1), star(4))
    assert s_nk(6, 2).size() == 9
    plus = s_nk_plus(6, 2)
    assert plus.size() == 10 and odd_girth(plus) == 3
    with pytest.raises(GraphError):
        s_nk(3, 3)
    with pytest.raises(GraphError):
        s_nk_plus(4, 3)


@pytest.mark.parametrize("n,k", [(7, 2), (11, 2), (9, 3), (15, 4)])
def test_g0_shape_and_embedding(n, k):
    g, p = g0(n, k)
    assert g.order == n - 2 * k + 4
    assert [len(c) for c in p.cells] == [2, n - 2 * k - 2, 2, 2]
    big = extremal_by_order(n, k)
    image = g0_embedding(n, k)
    assert len(set(image)) == g.order
    assert all(big.has_edge(image[u], image[v]) for u, v in g.edges())
    assert g.size() < big.size()


def test_g0_quotient_matches_lower_bound_matrix():
    b = quotient(*g0(11, 2))
    assert b.equitable
    assert b.tolist() == [[6, 5, 1, 0], [2, 2, 0, 0], [1, 0, 2, 1], [0, 0, 1, 1]]


def test_g0_parameter_errors():
    with pytest.raises(GraphError):
        g0(6, 2)
    with pytest.raises(GraphError):
        g0(9, 1)


def test_rotate_edge_examples():
    g = path(3)  # 0-1-2
    h = rotate_edge(g, 2, 1, 0)
    assert is_isomorphic(h, path(3))
    with pytest.raises(GraphError):
        rotate_edge(g, 2, 0, 1)
    with pytest.raises(GraphError):
        rotate_edge(g, 2, 1, 2)


def test_rotating_pendant_to_heavier_anchor_increases_q():
    # C5 with a pendant star at vertex 0, but one leaf hung on vertex 2 instead
    base = cycle_star(1, 8)
    leaf = 7
    g = rotate_edge(base, leaf, 0, 2)
    x = perron_vector(g).entries
    assert x[0] > x[2]
    assert q_index(rotate_edge(g, leaf, 2, 0)) > q_index(g) + 1e-9


def test_subdivide_examples():
    assert is_isomorphic(subdivide_edge(cycle(5), 0, 1), cycle(6))
    assert is_isomorphic(subdivide_edge(path(2), 0, 1), path(3))
    g = cycle_star(1, 8)
    (p,) = find_internal_paths(g)
    u, v = p.edges()[0]
    h = subdivide_edge(g, u, v)
    assert (h.order, h.size()) == (g.order + 1, g.size() + 1)
    assert q_index(h) < q_index(g) - 1e-9
    with pytest.raises(GraphError):
        subdivide_edge(cycle(5), 0, 2)


def test_find_internal_paths_examples():
    paths = find_internal_paths(cycle_star(1, 8))
    assert len(paths) == 1 and paths[0].is_cycle and paths[0].vertices[0] == 0
    assert find_internal_paths(star(4)) == []
    g = blow_up(cycle(7), [2, 1, 1, 1, 1, 1, 1])
    found = find_internal_paths(g)
    # the degree-3 neighbours 2 and 7 of the doubled cell are joined through
    # each vertex of that cell and the long way round the cycle
    assert [(p.vertices[0], p.vertices[-1]) for p in found] == [(2, 7)] * 3
    assert sorted(len(p.vertices) for p in found) == [3, 3, 6]
    for p in found:
        p.validate(g)


@given(graphs(max_order=8))
@settings(max_examples=150, deadline=None)
def test_internal_paths_satisfy_definition(g):
    for p in find_internal_paths(g):
        p.validate(g)


def test_internal_path_validation_errors():
    g = cycle_star(1, 8)
    with pytest.raises(GraphError):
        InternalPath((1, 2)).validate(g)
    with pytest.raises(GraphError):
        InternalPath((0,)).validate(g)


@pytest.mark.parametrize("n1,n2", [(2, 2), (3, 2), (2, 4)])
def test_contract_seven_cycle_blow_up_to_six_cycle(n1, n2):
    r = [n1, n2, 1, 1, 1, 1, 1]
    g = blow_up(cycle(7), r)
    start = n1 + n2  # first singleton cell
    seg = InternalPath((start + 2, start + 3, start + 4))
    h = contract_path_to_edge(g, seg)
    assert is_isomorphic(h, blow_up(cycle(6), [n1, n2, 1, 1, 1, 1]))


@given(graphs(min_order=2, max_order=8))
@settings(max_examples=100, deadline=None)
def test_contraction_inverts_subdivision(g):
    for u, v in g.edges():
        h = subdivide_edge(g, u, v)
        assert contract_path_to_edge(h, InternalPath((u, g.order, v))) == g


def test_contraction_errors():
    g = cycle_star(1, 8)
    with pytest.raises(GraphError):
        contract_path_to_edge(g, find_internal_paths(g)[0])   # cycle
    with pytest.raises(GraphError):
        contract_path_to_edge(cycle(5), InternalPath((0, 1)))
    with pytest.raises(GraphError):
        contract_path_to_edge(path(3).add_edge(0, 2), InternalPath((0, 1, 2)))
