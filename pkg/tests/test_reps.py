"""Finite-dimensional sl2 modules: matrices, scalars, witness vectors."""

from fractions import Fraction

import pytest

from envlld.algebra import sl2
from envlld.center import casimir_elements
from envlld.reps import (apply_to_vector, c_scalar, casimir_scalars,
                         d2_scalar, d3_scalar, eval_element, mat_identity,
                         mat_mul, mat_scale, mat_zero, prop32_vector,
                         sl2_irrep, sym_power_rep, theorem1_witness)


def _defects_vanish(R):
    zero = mat_zero(R.dim)
    names = R.algebra.gens
    return all(R.bracket_defect(a, b) == zero for a in names for b in names)


def test_center_scalars():
    assert [c_scalar(k) for k in range(1, 6)] == \
        [0, Fraction(3, 2), 4, Fraction(15, 2), 12]
    assert d2_scalar(1, 1) == 9
    assert d3_scalar(1, 1) == -9
    assert d3_scalar(1, 0) == Fraction(-16, 9)
    assert d3_scalar(0, 1) == Fraction(-56, 9)


def test_scalars_by_label():
    assert casimir_scalars("rho_4") == (Fraction(15, 2),)
    assert casimir_scalars("pi_1_1") == (9, -9)
    for bad in ("rho", "pi_1", "sigma_2", "rho_x"):
        with pytest.raises(ValueError):
            casimir_scalars(bad)


def test_defining_matrices_small():
    R = sl2_irrep(3)
    assert R.matrix("X") == ((0, 2, 0), (0, 0, 1), (0, 0, 0))
    assert R.matrix("Y") == ((0, 0, 0), (1, 0, 0), (0, 2, 0))
    assert R.matrix("H") == ((2, 0, 0), (0, 0, 0), (0, 0, -2))
    assert sl2_irrep(1).matrix("H") == ((0,),)


@pytest.mark.parametrize("k", [2, 3, 4, 6])
def test_matrices_satisfy_the_brackets(k):
    assert _defects_vanish(sl2_irrep(k))


@pytest.mark.parametrize("k", list(range(1, 7)))
def test_casimir_acts_by_its_scalar(k):
    C = casimir_elements("sl2")["C"]
    R = sl2_irrep(k)
    assert eval_element(C, R) == mat_scale(mat_identity(k), c_scalar(k))


def test_eval_with_center_coefficient():
    A = sl2()
    from envlld.centerpoly import CenterPoly
    p = A.pbw_gen("X").scale(CenterPoly.variable(1))
    R = sl2_irrep(2)
    assert eval_element(p, R) == mat_scale(R.matrix("X"), c_scalar(2))
    # symmetric-power blocks carry no stored center point
    with pytest.raises(ValueError):
        eval_element(p, sym_power_rep(2, 1))


def test_apply_matches_matrix_action():
    A = sl2()
    R = sl2_irrep(4)
    e = A.pbw_mono((1, 1, 0)) - A.pbw_mono((0, 0, 2)).scale(Fraction(1, 3))
    vec = [Fraction(1), Fraction(-2), Fraction(0), Fraction(3)]
    M = eval_element(e, R)
    want = [sum(M[i][j] * vec[j] for j in range(4)) for i in range(4)]
    assert apply_to_vector(e, R, vec) == want


def test_symmetric_powers():
    assert sl2_irrep(2).matrix("H") == ((1, 0), (0, -1))
    C = casimir_elements("sl2")["C"]
    # degree 1 over two block copies of the defining module: the blocks are
    # untouched, so the Casimir still acts by its defining-module scalar
    S1 = sym_power_rep(2, 1)
    assert S1.dim == 4
    assert S1.matrix("H") == tuple(
        tuple(Fraction((-1) ** j) if i == j else Fraction(0) for j in range(4))
        for i in range(4))
    assert eval_element(C, S1) == mat_scale(mat_identity(4), c_scalar(2))
    # degree 2: Sym^2(V + V) = Sym^2 V + V x V + Sym^2 V splits as three
    # 3-dimensional modules plus a trivial one, so trace C = 3 * 3 * 4
    S2 = sym_power_rep(2, 2)
    assert S2.dim == 10
    assert _defects_vanish(S2)
    M = eval_element(C, S2)
    assert sum(M[i][i] for i in range(10)) == 36
    assert M != mat_scale(mat_identity(10), Fraction(36, 10))


def test_block_witness_shape():
    R, vec = theorem1_witness(2, 2)
    assert R.dim == 14 == len(vec)
    # degree 1 block: diagonal slots of a 2 by 2 grid; degree 2 block:
    # multinomial counts 1, 2, 1 on the three diagonal-supported monomials
    assert vec[:4] == [1, 0, 0, 1]
    assert vec[4:] == [1, 0, 0, 2, 0, 0, 0, 0, 0, 1]
    assert _defects_vanish(R)


def test_distinguished_vector():
    assert prop32_vector(1) == [0, 1, 0, 1]
    assert prop32_vector(2) == [0, 0, 1, 0, 0, 0, 1, 0, 1]
    assert prop32_vector(1, 2) == [0, 1, 0, 1, 0, 0]
    with pytest.raises(ValueError):
        prop32_vector(0)


def test_monomial_matrix_is_a_product():
    R = sl2_irrep(3)
    m = R.mono_matrix((2, 1, 1))
    prod = mat_mul(mat_mul(R.matrix("X"), R.matrix("X")),
                   mat_mul(R.matrix("Y"), R.matrix("H")))
    assert m == prod
