import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bielliptic.motives import (
    L,
    ONE,
    ZERO,
    Gen,
    GradedClass,
    GradedEquivariantClass,
    MotiveClass,
    cusp,
    graded_mul,
    lambda2,
    psi2,
    super_invariants,
    sym2,
)

S28 = cusp(2, 8)
ATOMS = [ONE, L, L * L, S28, cusp(4, 6), cusp(1, 12), cusp(2, 10), cusp(1, 24), S28 * L]


@st.composite
def effective_classes(draw):
    coeffs = draw(st.lists(st.integers(0, 3), min_size=len(ATOMS), max_size=len(ATOMS)))
    return sum((a * c for a, c in zip(ATOMS, coeffs)), ZERO)


def test_ring_examples():
    assert L * L == L**2
    assert (L - 1) * (L + 1) == L**2 - 1
    prod = S28 * L**4
    assert prod.rank() == 2
    (mono, coeff), = prod.items()
    assert coeff == 1
    assert sum(g.hodge_weight() * e for g, e in mono) == 15


def test_cusp_symbols():
    assert cusp(1, 10) == ZERO
    assert S28.generators() == {Gen("S", 2, 8)}
    assert S28.rank() == 2
    assert cusp(1, 24).rank() == 4


def test_rendering():
    x = S28 - L**4 + 3 * L + 5
    assert str(x) == "S[2,8] - L^4 + 3L + 5"
    assert str(ZERO) == "0"
    assert (L**2 - L).latex() == r"\mathbf{L}^2-\mathbf{L}"
    assert MotiveClass.from_json(x.to_json()) == x
    assert (L**3 - L).l_polynomial() == {3: 1, 1: -1}
    assert x.drop(kinds=("S",)) == -L**4 + 3 * L + 5
    with pytest.raises(ValueError):
        x.l_polynomial()


def test_non_integral_rejected():
    with pytest.raises(ArithmeticError):
        (L + 1).half()


@pytest.mark.parametrize("x,expected", [
    (L + 1, L**2 + 1),
    (S28, S28 * S28 - 2 * L**7),
    (ZERO, ZERO),
])
def test_psi2_examples(x, expected):
    assert psi2(x) == expected


def test_psi2_multi_eigenform():
    with pytest.raises(NotImplementedError):
        psi2(cusp(1, 24))
    assert psi2(cusp(1, 24), formal=True).rank() == 4
    with pytest.raises(NotImplementedError):
        psi2(lambda2(cusp(1, 24)) - L * cusp(1, 24))


def test_lambda_examples():
    assert lambda2(S28) == L**7
    assert sym2(L) == L**2
    assert lambda2(L) == ZERO
    assert lambda2(ONE) == ZERO
    assert sym2(ONE) == ONE
    assert lambda2(L + 1) == L


def test_graded_examples():
    assert graded_mul(GradedClass(even=L), GradedClass(odd=ONE)) == GradedClass(odd=L)
    assert graded_mul(GradedClass(odd=S28), GradedClass(odd=L)) == GradedClass(even=S28 * L)
    unit = GradedClass(even=ONE)
    g = GradedClass(even=L + 1, odd=S28)
    assert graded_mul(unit, g) == g
    assert super_invariants(GradedClass(even=L), "+") == GradedClass(even=L**2)
    assert super_invariants(GradedClass(odd=ONE), "+") == GradedClass()
    assert super_invariants(GradedClass(odd=S28), "+") == GradedClass(even=L**7)
    assert super_invariants(GradedClass(odd=ONE), "-") == GradedClass(even=ONE)
    with pytest.raises(ValueError):
        super_invariants(g, "0")


def test_equivariant_container():
    g = GradedEquivariantClass(s3=GradedClass(even=L), s21=GradedClass(odd=ONE))
    assert g.euler() == {"s3": L, "s21": -ONE, "s111": ZERO}
    assert GradedEquivariantClass.from_json(g.to_json()) == g
    with pytest.raises(KeyError):
        g["s4"]


@given(effective_classes(), effective_classes())
@settings(max_examples=100, deadline=None)
def test_lambda_ring_properties(x, y):
    assert x.is_effective()
    assert sym2(x) + lambda2(x) == x * x
    assert lambda2(x).rank() + sym2(x).rank() == x.rank() ** 2
    assert lambda2(x).rank() == x.rank() * (x.rank() - 1) // 2
    assert (x * y).rank() == x.rank() * y.rank()
    assert (x + y).rank() == x.rank() + y.rank()
    assert lambda2(x + y) == lambda2(x) + x * y + lambda2(y)


@given(effective_classes(), effective_classes())
@settings(max_examples=100, deadline=None)
def test_super_invariants_partition(even, odd):
    g = GradedClass(even=even, odd=odd)
    plus, minus = super_invariants(g, "+"), super_invariants(g, "-")
    assert plus + minus == graded_mul(g, g)
