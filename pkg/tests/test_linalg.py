"""Fraction-free elimination, kernels, and the rational helpers."""

from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from envlld.centerpoly import CenterPoly, poly_eval
from envlld.linalg import (PolyMatrix, RatEchelon, ff_rank_kernel, rat_inv,
                           rat_rank, rat_solve, solve_fraction_field)

C = CenterPoly.variable(1)
ONE = CenterPoly.const(1, 1)
ZERO = CenterPoly.zero(1)


def const(v):
    return CenterPoly.const(1, Fraction(v))


def mat(rows):
    return PolyMatrix(1, len(rows), len(rows[0]), rows)


def test_rank_one_with_kernel():
    res = ff_rank_kernel(mat([[ONE, C], [ZERO, ZERO]]))
    assert res.rank == 1
    assert res.kernel_basis == ((C, const(-1)),)


def test_full_rank_empty_kernel():
    res = ff_rank_kernel(mat([[C, const(Fraction(3, 2))],
                              [const(Fraction(3, 2)), C]]))
    assert res.rank == 2
    assert res.kernel_basis == ()


def test_zero_matrix_kernel_is_standard():
    res = ff_rank_kernel(mat([[ZERO, ZERO], [ZERO, ZERO]]))
    assert res.rank == 0
    assert res.kernel_basis == ((ONE, ZERO), (ZERO, ONE))


def polys(arity, max_deg=2):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(arity)])
    coeffs = st.fractions(min_value=-6, max_value=6, max_denominator=4)
    return st.dictionaries(exps, coeffs, max_size=3).map(
        lambda d: CenterPoly(arity, d))


def poly_matrices(arity):
    return st.integers(1, 4).flatmap(
        lambda r: st.integers(1, 4).flatmap(
            lambda c: st.lists(
                st.lists(polys(arity), min_size=c, max_size=c),
                min_size=r, max_size=r).map(
                    lambda rows: PolyMatrix(arity, r, c, rows))))


@settings(max_examples=40, deadline=None)
@given(st.one_of(poly_matrices(1), poly_matrices(2)))
def test_kernel_vectors_annihilate(M):
    res = ff_rank_kernel(M)
    assert res.rank + len(res.kernel_basis) == M.cols
    for v in res.kernel_basis:
        for i in range(M.rows):
            acc = CenterPoly.zero(M.arity)
            for j in range(M.cols):
                acc = acc + M.entries[i][j] * v[j]
            assert acc.is_zero()


@settings(max_examples=25, deadline=None)
@given(poly_matrices(1), st.integers(0, 10 ** 6))
def test_sampled_rank_never_exceeds_symbolic(M, seed):
    sym = ff_rank_kernel(M).rank
    rng = random.Random(seed)
    attained = 0
    for _ in range(20):
        pt = (Fraction(rng.randint(-9, 9), rng.randint(1, 9)),)
        ech = RatEchelon(M.cols)
        for i in range(M.rows):
            ech.add([poly_eval(M.entries[i][j], pt) for j in range(M.cols)])
        assert ech.rank <= sym
        attained = max(attained, ech.rank)
    assert attained == sym


# --- fraction-field solve ---

def test_solve_known_system():
    # columns (3/2, C), (C, 3/2) against target (1, 0): clears to
    # denominator 4C^2 - 9 after joint normalization
    M = mat([[const(Fraction(3, 2)), C], [C, const(Fraction(3, 2))]])
    b = (ONE, ZERO)
    z0, z = solve_fraction_field(M, b)
    assert z0 == CenterPoly(1, {(2,): Fraction(4), (0,): Fraction(-9)})
    assert z == (const(-6), C * 4)
    for i in range(2):
        acc = z0 * (-b[i])
        for j in range(2):
            acc = acc + M.entries[i][j] * z[j]
        assert acc.is_zero()


def test_solve_column_of_the_matrix():
    M = mat([[ONE, C], [C, ZERO]])
    b = (ONE, C)
    z0, z = solve_fraction_field(M, b)
    assert z0 == ONE and z == (ONE, ZERO)


def test_solve_inconsistent_is_none():
    M = mat([[ONE], [ZERO]])
    assert solve_fraction_field(M, (ZERO, ONE)) is None


# --- rational helpers ---

def test_echelon_membership():
    ech = RatEchelon(3)
    assert ech.add([Fraction(1), Fraction(0), Fraction(2)])
    assert ech.add([Fraction(0), Fraction(1), Fraction(0)])
    assert not ech.add([Fraction(2), Fraction(1), Fraction(4)])
    assert ech.rank == 2
    assert ech.contains([Fraction(3), Fraction(-1), Fraction(6)])
    assert not ech.contains([Fraction(0), Fraction(0), Fraction(1)])


def test_rat_rank_and_solve():
    vecs = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rat_rank(vecs, 2) == 1
    cols = [[Fraction(1), Fraction(0)], [Fraction(1), Fraction(1)]]
    coords = rat_solve(cols, [Fraction(3), Fraction(2)])
    assert coords == [Fraction(1), Fraction(2)]
    assert rat_solve(cols[:1], [Fraction(0), Fraction(1)]) is None


def test_rat_inv():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = rat_inv(m)
    assert inv == [[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    with pytest.raises(ValueError):
        rat_inv([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]])
