import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qextremal.constructions import blow_up, blow_up_partition, complete, cycle, g0, path, star
from qextremal.graph import Graph, GraphError
from qextremal.partitions import quotient
from qextremal.spectral import (X, ConvergenceError, IntegerPolynomial, SymmetricIntMatrix, char_poly,
                                largest_real_root, perron_vector, q_index, reference_f,
                                reference_f_difference, reference_g, signless_laplacian, squarefree_part)

from conftest import connected_graphs, graphs


def numpy_q(g):
    if g.size() == 0:
        return 0.0
    return float(np.linalg.eigvalsh(np.array(signless_laplacian(g).tolist(), dtype=float))[-1])


def sympy_charpoly(rows):
    x = sympy.Symbol("x")
    p = sympy.Matrix(rows).charpoly(x)
    return [int(c) for c in reversed(p.all_coeffs())]


def test_signless_laplacian_examples():
    assert signless_laplacian(path(2)).tolist() == [[1, 1], [1, 1]]
    assert signless_laplacian(complete(3)).tolist() == [[2, 1, 1], [1, 2, 1], [1, 1, 2]]
    q = signless_laplacian(star(3)).tolist()
    assert [q[i][i] for i in range(4)] == [3, 1, 1, 1]
    assert q[0][1:] == [1, 1, 1]


def test_matrix_validation():
    with pytest.raises(ValueError):
        SymmetricIntMatrix(((1, 2),))
    with pytest.raises((ValueError, TypeError)):
        SymmetricIntMatrix(((1, 0.5), (0.5, 1)))
    assert not SymmetricIntMatrix(((1, 2), (3, 4))).symmetric


@pytest.mark.parametrize("n", [3, 4, 5, 9, 20])
def test_q_of_cycles(n):
    assert q_index(cycle(n)) == pytest.approx(4, abs=1e-10)


def test_q_examples():
    assert q_index(star(5)) == pytest.approx(6, abs=1e-10)
    g = blow_up(cycle(7), [4, 1, 1, 1, 1, 1, 1])
    q = q_index(g)
    assert 6.85 < q < 7
    assert q > q_index(g0(10, 2)[0])
    assert q_index(Graph(1)) == 0.0
    assert q_index(Graph(3)) == 0.0


@given(graphs(max_order=10))
@settings(max_examples=200, deadline=None)
def test_q_matches_numpy(g):
    assert abs(q_index(g) - numpy_q(g)) <= 1e-9


@given(graphs(max_order=6), graphs(max_order=6))
@settings(max_examples=80, deadline=None)
def test_q_of_disjoint_union_is_max(g, h):
    assert abs(q_index(g.disjoint_union(h)) - max(q_index(g), q_index(h))) <= 1e-9


def test_perron_examples():
    pv = perron_vector(cycle(5))
    assert all(abs(x - 1 / math.sqrt(5)) < 1e-10 for x in pv.entries)
    x = perron_vector(star(3)).entries
    assert x[0] > max(x[1:]) + 1e-6
    x = perron_vector(path(3)).entries
    assert x[1] > x[0] and x[1] > x[2]
    with pytest.raises(GraphError):
        perron_vector(cycle(3).disjoint_union(path(2)))


@given(connected_graphs(max_order=10))
@settings(max_examples=150, deadline=None)
def test_perron_vector_invariants(g):
    pv = perron_vector(g)
    x = np.array(pv.entries)
    assert abs(np.linalg.norm(x) - 1) <= 1e-12
    assert (x > 1e-12).all()
    q = np.array(signless_laplacian(g).tolist(), dtype=float)
    assert np.abs(q @ x - pv.eigenvalue * x).max() <= 1e-9
    assert abs(pv.eigenvalue - q_index(g)) <= 1e-9


def test_convergence_failure_is_signalled():
    with pytest.raises(ConvergenceError):
        q_index(cycle(5).add_edge(0, 2), maxiter=1)


def test_char_poly_examples():
    assert char_poly([[1, 0], [0, 1]]) == (X - 1) ** 2
    b = quotient(*g0(11, 2)).as_int_matrix()
    assert char_poly(b) == X * (X**3 - 11 * X**2 + 26 * X - 11)
    r = (3, 2, 1, 1, 1, 1)
    b6 = quotient(blow_up(cycle(6), r), blow_up_partition(r)).as_int_matrix()
    assert char_poly(b6) == reference_f(3, 2, 2, 10)
    with pytest.raises((ValueError, TypeError)):
        char_poly([[Fraction(1, 2)]])


@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=100, deadline=None)
def test_char_poly_matches_sympy(rows):
    assert char_poly(rows).tolist() == sympy_charpoly(rows)


def test_char_poly_big_integers():
    rows = [[10**30 if i == j else 1 for j in range(4)] for i in range(4)]
    assert char_poly(rows).tolist() == sympy_charpoly(rows)


@given(graphs(min_order=2, max_order=9))
@settings(max_examples=100, deadline=None)
def test_exact_and_numeric_paths_agree(g):
    p = char_poly(signless_laplacian(g))
    q = q_index(g)
    assert abs(float(p(Fraction(q)))) <= 1e-6 * max(1, max(abs(c) for c in p.coeffs))
    assert abs(largest_real_root(p) - q) <= 1e-9


def test_largest_real_root_examples():
    assert largest_real_root(X**2 - 4) == pytest.approx(2, abs=1e-12)
    r = largest_real_root(reference_g(11, 2))
    assert 8 - Fraction(3, 22) < r < 8
    assert abs(r - q_index(g0(11, 2)[0])) <= 1e-9
    n, k = 12, 2
    f = reference_f(n - 2 * k - 3, 2, k, n)
    assert largest_real_root(f) < n - 2 * k + 1 - Fraction(3, 2 * (n - 2 * k + 4))
    assert largest_real_root((X - 3) ** 3 * (X + 1)) == pytest.approx(3, abs=1e-12)
    with pytest.raises(ValueError):
        largest_real_root(X**2 + 1)


def test_reference_g_instances():
    assert str(reference_g(11, 2)) == "x^4 - 11x^3 + 26x^2 - 11x"
    assert str(reference_g(7, 2)) == "x^4 - 7x^3 + 14x^2 - 7x"
    with pytest.raises(ValueError):
        reference_g(6, 2)


def test_reference_f_properties():
    f = reference_f(2, 2, 2, 9)
    assert f.degree == 6 and f.coeffs[0] == 0
    diff = reference_f(3, 2, 2, 10) - reference_f(4, 1, 2, 10)
    assert diff == 2 * X * (X - 3) * (X**2 - 8 * X + 9)
    assert diff == reference_f_difference(3, 2, 10)
    with pytest.raises(ValueError):
        reference_f(2, 2, 2, 10)
    with pytest.raises(ValueError):
        reference_f(0, 5, 2, 10)


def test_reference_f_matches_six_cell_quotient():
    r = (2, 2, 1, 1, 1, 1)
    b = quotient(blow_up(cycle(6), r), blow_up_partition(r))
    assert b.equitable
    assert char_poly(b.as_int_matrix()) == reference_f(2, 2, 2, 9)


def test_polynomial_arithmetic():
    p = IntegerPolynomial((1, 2, 3))
    assert (p * 0).degree == -1
    assert p.derivative() == IntegerPolynomial((2, 6))
    assert p(2) == 17 and p(Fraction(1, 2)) == Fraction(11, 4)
    assert str(-X**3 + 1) == "-x^3 + 1"
    assert p - p == IntegerPolynomial(())


def test_squarefree_part_roots():
    p = (X - 1) ** 3 * (X + 2) ** 2 * X
    sq = squarefree_part(p)
    monic = [c / sq[-1] for c in sq]
    assert monic == [Fraction(c) for c in ((X - 1) * (X + 2) * X).coeffs]
