import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bielliptic.weylchars import (
    Laurent,
    VirtualSp4Class,
    W,
    adams,
    decompose_character,
    decompose_weighted_character,
    sp2_character,
    sp2_dim,
    sp2_tensor,
    sp4_character,
    sp4_dim,
    sp4_pieri,
    sp4_tensor,
)

from conftest import alt_power, eigen_laurent, sym_power

labels = st.tuples(st.integers(0, 6), st.integers(0, 6)).map(lambda p: (max(p), min(p)))
small_labels = st.tuples(st.integers(0, 3), st.integers(0, 3)).map(lambda p: (max(p), min(p)))


def alternant(mu):
    """sum over signed permutations of sign(w) x^(w mu)."""
    out = Laurent(nvars=2)
    for perm, psign in (((0, 1), 1), ((1, 0), -1)):
        for s0, s1 in itertools.product((1, -1), repeat=2):
            exp = (s0 * mu[perm[0]], s1 * mu[perm[1]])
            out = out + Laurent.monomial(exp, psign * s0 * s1)
    return out


# ---------------------------------------------------------------- Laurent ring

def test_laurent_arithmetic():
    x = Laurent.monomial((1, 0))
    y = Laurent.monomial((0, 1))
    p = (x + y) ** 2
    assert p == x * x + x * y * 2 + y * y
    assert p - p == Laurent(nvars=2)
    assert (p / 2).coeff((1, 1)) == 1
    assert (x * 3 / 2).coeff((1, 0)) == Fraction(3, 2)
    assert x.evaluate((2, 5)) == 2


def test_laurent_dilate_and_specialize():
    x = Laurent.monomial((1, -1), 3)
    assert x.dilate(2) == Laurent.monomial((2, -2), 3)
    one_var = x.specialize(lambda e: (1, (e[0] + e[1],)), nvars=1)
    assert one_var == Laurent.constant(3, 1)


@given(st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                       st.integers(-5, 5), max_size=5),
       st.dictionaries(st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
                       st.integers(-5, 5), max_size=5))
def test_laurent_ring_axioms(a, b):
    p, q = Laurent(a), Laurent(b)
    assert p * q == q * p
    assert (p + q) * p == p * p + q * p
    assert (p + q).evaluate((2, 3)) == p.evaluate((2, 3)) + q.evaluate((2, 3))


# ------------------------------------------------------------------------ Sp(2)

def test_sp2_basics():
    assert [sp2_dim(a) for a in range(4)] == [1, 2, 3, 4]
    assert sp2_character(2) == Laurent({(2,): 1, (0,): 1, (-2,): 1}, nvars=1)
    assert sp2_tensor(2, 1) == [3, 1]
    assert sp2_tensor(3, 3) == [6, 4, 2, 0]


@given(st.integers(0, 12), st.integers(0, 12))
def test_clebsch_gordan_characters(a, b):
    total = Laurent(nvars=1)
    for c in sp2_tensor(a, b):
        total = total + sp2_character(c)
    assert total == sp2_character(a) * sp2_character(b)


# ------------------------------------------------------------------------ Sp(4)

@pytest.mark.parametrize("l,m,dim", [(0, 0, 1), (1, 0, 4), (1, 1, 5), (2, 0, 10),
                                     (2, 1, 16), (2, 2, 14), (3, 0, 20), (3, 3, 30)])
def test_dimensions(l, m, dim):
    assert sp4_dim(l, m) == dim
    assert sp4_character(l, m).evaluate((1, 1)) == dim


def test_invalid_label():
    with pytest.raises(ValueError):
        sp4_dim(1, 2)
    with pytest.raises(ValueError):
        sp4_character(-1, 0)


@given(labels)
def test_weyl_numerator_identity(lm):
    l, m = lm
    assert sp4_character(l, m) * alternant((2, 1)) == alternant((l + 2, m + 1))


@given(labels)
def test_characters_weyl_invariant(lm):
    assert sp4_character(*lm).is_weyl_invariant()


def test_small_characters_from_eigenvalues(std_weights):
    assert sp4_character(1, 0) == eigen_laurent(std_weights, lambda w: sym_power(w, 1))
    for k in range(5):
        assert sp4_character(k, 0) == eigen_laurent(std_weights, lambda w: sym_power(w, k))
    wedge2 = eigen_laurent(std_weights, lambda w: alt_power(w, 2))
    assert wedge2 == sp4_character(1, 1) + sp4_character(0, 0)


@given(labels)
def test_decompose_round_trip(lm):
    assert decompose_character(sp4_character(*lm)) == W(*lm)


def test_decompose_rejects_non_characters():
    with pytest.raises(ValueError):
        decompose_character(Laurent.monomial((1, 0)))


# ------------------------------------------------------- virtual classes

def test_virtual_class_arithmetic():
    v = W(2, 1) + W(1, 0, 1) * 3 - W(0, 0)
    assert v.dim() == 16 + 12 - 1
    assert v[(1, 0, 1)] == 3
    assert (v - v) == VirtualSp4Class()
    assert v.untwisted() == W(2, 1) + W(1, 0) * 3 - W(0, 0)
    assert VirtualSp4Class.from_json(v.to_json()) == v
    assert v.twist(2)[(1, 0, 3)] == 3


def test_out_of_cone_labels_dropped():
    assert W(1, 2) == VirtualSp4Class()
    assert W(0, -1) == VirtualSp4Class()


def test_tensor_pins():
    assert sp4_tensor(W(1, 0), W(1, 0)) == W(2, 0) + W(1, 1) + W(0, 0, 1)
    assert sp4_tensor(W(1, 0), W(1, 0), hodge=False) == W(2, 0) + W(1, 1) + W(0, 0)
    assert sp4_tensor(W(1, 1), W(1, 0), hodge=False) == W(1, 0) + W(2, 1)
    assert sp4_tensor(W(1, 1), W(1, 0)) == W(1, 0, 1) + W(2, 1)
    assert sp4_tensor(W(1, 0, 2), W(0, 0, 1)) == W(1, 0, 3)


@given(labels, labels)
@settings(max_examples=40, deadline=None)
def test_tensor_matches_characters(a, b):
    prod = sp4_tensor(W(*a), W(*b), hodge=False)
    assert prod.character() == sp4_character(*a) * sp4_character(*b)
    assert prod.dim() == sp4_dim(*a) * sp4_dim(*b)


@given(labels, labels)
@settings(max_examples=40, deadline=None)
def test_tensor_is_hodge_homogeneous(a, b):
    w = sum(a) + sum(b)
    for (l, m, t), _ in sp4_tensor(W(*a), W(*b)).items():
        assert l + m + 2 * t == w


@given(labels)
@settings(deadline=None)
def test_pieri_matches_tensor(lm):
    assert sp4_pieri(*lm) == sp4_tensor(W(*lm), W(1, 0), hodge=False)


def test_pieri_example():
    assert sp4_pieri(2, 1) == W(3, 1) + W(2, 2) + W(2, 0) + W(1, 1)


def test_adams_pins():
    assert adams(2, W(1, 0), hodge=False) == W(2, 0) - W(1, 1) - W(0, 0)
    assert adams(2, W(1, 0)) == W(2, 0) - W(1, 1) - W(0, 0, 1)
    assert adams(1, W(2, 1, 3)) == W(2, 1, 3)
    assert adams(3, W(0, 0, 1)) == W(0, 0, 3)
    with pytest.raises(ValueError):
        adams(0, W(1, 0))


@given(small_labels, st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_adams_is_character_dilation(lm, d):
    psi = adams(d, W(*lm), hodge=False)
    assert psi.character() == sp4_character(*lm).dilate(d)
    assert psi.dim() == sp4_dim(*lm)


@given(small_labels, small_labels)
@settings(max_examples=25, deadline=None)
def test_adams_is_multiplicative(a, b):
    lhs = adams(2, sp4_tensor(W(*a), W(*b)))
    rhs = sp4_tensor(adams(2, W(*a)), adams(2, W(*b)))
    assert lhs == rhs


def test_weighted_decomposition_round_trip():
    v = W(2, 1, 1) - W(0, 0, 3) * 2 + W(1, 1) * Fraction(1, 2)
    assert decompose_weighted_character(v.weighted_character()) == v
    assert not v.is_integral()
