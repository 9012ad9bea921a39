import pytest

from bielliptic.cohomology import (
    ec_A1,
    ec_Delta,
    ec_E2,
    ec_M,
    ec_M_label,
    ec_trivial_independent,
    ec_wreath,
    ec_Y2,
)
from bielliptic.dimforms import equivariant_cusp_dims
from bielliptic.motives import L, ONE, ZERO, GradedClass, cusp, lambda2, sym2
from bielliptic.weylchars import W, sp2_tensor
from bielliptic.wreath import Diag, Pair, U, twisted_pullback

EVEN = range(2, 11, 2)


def test_y2_examples():
    assert ec_Y2(1) == ec_Y2(3) == type(ec_Y2(1))()
    zero = ec_Y2(0)
    assert zero.euler() == {"s3": L, "s21": -ONE, "s111": ZERO}
    six = ec_Y2(6)
    assert six["s3"] == GradedClass(odd=ONE)
    assert six["s21"] == GradedClass(odd=cusp(2, 8) + 1)
    assert six["s111"] == GradedClass()
    with pytest.raises(ValueError):
        ec_Y2(-2)


@pytest.mark.parametrize("a", EVEN)
def test_y2_ranks_match_modular_forms(a):
    # H^1_c ranks: two per cusp form, plus one per cusp in s3 + s21
    m = equivariant_cusp_dims(a + 2)
    ranks = {rho: g.odd.rank() for rho, g in ec_Y2(a).items()}
    assert ranks == {"s3": 2 * m.s3 + 1, "s21": 2 * m.s21 + 1, "s111": 2 * m.s111}


def test_a1_examples():
    assert ec_A1(10) == -cusp(1, 12) - 1
    assert ec_A1(10).rank() == -3
    assert ec_A1(2) == -ONE
    assert ec_A1(0) == L
    assert ec_A1(3) == ZERO


def test_e2_examples():
    assert ec_E2(Diag(0, "+")) == L**2
    assert ec_E2(Pair(3, 2)) == ZERO
    assert ec_E2(Diag(6, "+")) == cusp(2, 8) + L**7
    assert ec_E2(Diag(1, "-")) == ZERO


def test_e2_independent_constant_system():
    assert ec_trivial_independent() == L**2 - L


@pytest.mark.parametrize("a", EVEN)
@pytest.mark.parametrize("b", EVEN)
def test_e2_pairs_are_products_of_odd_parts(a, b):
    if a <= b:
        return
    ya, yb = ec_Y2(a), ec_Y2(b)
    expected = sum((ya[rho].odd * yb[rho].odd for rho in ("s3", "s21", "s111")), ZERO)
    assert ec_E2(Pair(a, b)) == expected


@pytest.mark.parametrize("a", EVEN)
@pytest.mark.parametrize("sign", "+-")
def test_e2_inner_part(a, sign):
    # remove the weight-zero Eisenstein classes: what is left is lambda2 / sym2 of cusp parts
    inner_op = lambda2 if sign == "+" else sym2
    total = ZERO
    for _, g in ec_Y2(a).items():
        cusp_part = g.odd.drop(tate=True)
        eis = g.odd - cusp_part
        assert eis in (ZERO, ONE)
        total = total + inner_op(cusp_part) + cusp_part * eis + inner_op(eis)
    assert ec_E2(Diag(a, sign)) == total


def test_delta_examples():
    assert ec_Delta(Pair(2, 1)) == ZERO
    assert ec_Delta(Diag(0, "+")) == L
    # V4 untwisted and V0 twisted by L^2
    assert ec_Delta(Diag(2, "+")) == ec_A1(4) + L**2 * ec_A1(0)
    assert ec_Delta(Diag(2, "+")) == L**3 - 1


@pytest.mark.parametrize("a", EVEN)
@pytest.mark.parametrize("b", EVEN)
def test_clebsch_gordan_symmetry(a, b):
    assert sp2_tensor(a, b) == sp2_tensor(b, a)


def test_gysin_sign():
    assert ec_E2(Diag(0, "+")) - ec_Delta(Diag(0, "+")) == L**2 - L


@pytest.mark.parametrize("lm,expected", [
    ((0, 0), L**2 - L),
    ((1, 0), ZERO),
    ((1, 1), L),
    ((2, 0), 2 - L),
    ((2, 2), L**4 - 2 * L**3 + 1),
])
def test_ec_M_pins(lm, expected):
    assert ec_M_label(*lm) == expected
    assert ec_M(W(*lm)) == expected


def test_ec_M_linearity_and_twists():
    v = W(1, 1) * 2 - W(0, 0, 2)
    assert ec_M(v) == 2 * L - L**2 * (L**2 - L)
    assert ec_wreath(twisted_pullback(2, 1)) == ec_M_label(2, 1)
    assert ec_wreath(U(0, 0)) == ec_M_label(0, 0) + ec_E2(Diag(0, "-")) - ec_Delta(Diag(0, "-"))


def test_ec_M_rejects_fractions():
    from fractions import Fraction
    with pytest.raises(ArithmeticError):
        ec_M(W(0, 0, 0, Fraction(1, 2)))
