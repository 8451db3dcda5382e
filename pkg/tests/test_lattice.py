from fractions import Fraction

from hypothesis import given, strategies as st

from vgit.exact.lattice import hnf, integral_solution, is_hnf, kernel_lattice
from vgit.exact.linalg import det, matmul, nullspace, primitive, rank, rref, solve

matrices = st.integers(1, 4).flatmap(
    lambda m: st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


def test_hnf_examples():
    h, u = hnf([[2, 0], [0, 3]])
    assert h == [[2, 0], [0, 3]] and u == [[1, 0], [0, 1]]
    h, _ = hnf([[0, 1], [1, 0]])
    assert h == [[1, 0], [0, 1]]
    a = [[2, 4], [1, 3]]
    h, u = hnf(a)
    assert h == [[1, 1], [0, 2]]
    assert matmul(u, a) == h
    assert abs(det(u)) == 1


@given(matrices)
def test_hnf_contract(a):
    h, u = hnf(a)
    assert is_hnf(h)
    assert matmul(u, a) == h
    assert abs(det(u)) == 1
    assert hnf(h)[0] == h


def test_primitive_and_lines():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((0, 0)) == (0, 0)


def test_rref_rank_solve():
    rows, piv = rref([[1, 2], [2, 4]])
    assert piv == [0] and rank([[1, 2], [2, 4]]) == 1
    assert solve([[1, 1], [1, -1]], [2, 0]) == (1, 1)
    assert solve([[1, 1], [2, 2]], [1, 2]) is None


def test_kernel_examples():
    m, nu = kernel_lattice([[1, 1]])
    assert m == [[1, -1]] and nu == [(1,), (-1,)]
    m, nu = kernel_lattice([[1, 0], [0, 1]])
    assert m == [] and nu == [(), ()]
    gamma = [[1, 1, 0, 0], [0, 0, 1, 1], [0, 1, 0, 1]]
    m, nu = kernel_lattice(gamma)
    assert m == [[1, -1, -1, 1]]
    assert [v[0] for v in nu] == [1, -1, -1, 1]


@given(matrices)
def test_kernel_saturated(gamma):
    m, _ = kernel_lattice(gamma)
    ncols = len(gamma[0])
    assert all(sum(g * x for g, x in zip(row, v)) == 0 for row in gamma for v in m)
    assert len(m) == ncols - rank(gamma)
    for k in nullspace(gamma, ncols):
        # adding a kernel element (or an integral combination) changes nothing
        assert hnf(m + [list(k)])[0][:len(m)] == m
    if m:
        doubled = [sum(x) for x in zip(*m)]
        half = [Fraction(x, 2) for x in doubled]
        if all(x.denominator == 1 for x in half):
            assert hnf(m + [[int(x) for x in half]])[0][:len(m)] == m


def test_integral_solution():
    assert integral_solution([[1, 1]], (1,)) == (1, 0)
    assert integral_solution([[1, 1]], (0,)) == (0, 0)
    assert integral_solution([[2, 2]], (1,)) is None


@given(matrices, st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_integral_solution_is_solution(gamma, x):
    x = x[:len(gamma[0])]
    chi = [sum(g * v for g, v in zip(row, x)) for row in gamma]
    a = integral_solution(gamma, chi)
    assert a is not None
    assert [sum(g * v for g, v in zip(row, a)) for row in gamma] == chi
