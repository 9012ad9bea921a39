"""Compactly supported Euler classes of local systems at level two.

Building blocks:

* ``Y(2)`` with ``V_a``, as an S3 = SL2(Z/2)-equivariant graded class
  (Eichler-Shimura plus the cusp contribution);
* the level-one curve ``A_1`` with ``V_c``;
* the bi-elliptic surface locus ``E_2 = Y(2)^2 / (S3 x S2)`` with the wreath
  systems ``U_{a,b}``, ``U_a^pm`` (Kuenneth, then invariants);
* the diagonal ``Delta`` inside ``E_2``;
* the bi-elliptic curve locus ``M = E_2 - Delta`` with ``W_{l,m}(-t)``.
"""
from __future__ import annotations

from functools import lru_cache

from .dimforms import cusp_count_gamma2
from .motives import (
    L,
    ONE,
    ZERO,
    GradedClass,
    GradedEquivariantClass,
    MotiveClass,
    cusp,
    psi2,
    super_invariants,
)
from .weylchars import VirtualSp4Class
from .wreath import Pair, WreathClass, WreathLabel, branch_wreath_to_diagonal, twisted_pullback

__all__ = [
    "ec_A1",
    "ec_Delta",
    "ec_E2",
    "ec_M",
    "ec_M_label",
    "ec_Y2",
    "ec_trivial_independent",
    "ec_wreath",
]


@lru_cache(maxsize=None)
def ec_Y2(a: int) -> GradedEquivariantClass:
    """``H_c^*(Y(2), V_a)`` split into S3-isotypic multiplicity spaces.

    Odd ``a`` gives zero (the elliptic involution acts by ``-1``).  For
    ``a = 0`` the curve has ``H^2_c = L`` and ``H^1_c`` equal to the standard
    representation (three cusps minus one).  For even ``a > 0`` only
    ``H^1_c`` survives: cusp motives in each isotypic part (level one in
    ``s3``; level two and again level one in ``s21``; level four in
    ``s111``), plus a weight-zero copy of the cusp permutation representation
    ``s3 + s21``.
    """
    if a < 0:
        raise ValueError(f"invalid weight {a}")
    if a % 2:
        return GradedEquivariantClass()
    if a == 0:
        return GradedEquivariantClass(
            s3=GradedClass(even=L),
            s21=GradedClass(odd=ONE),
        )
    k = a + 2
    return GradedEquivariantClass(
        s3=GradedClass(odd=cusp(1, k) + 1),
        s21=GradedClass(odd=cusp(1, k) + cusp(2, k) + 1),
        s111=GradedClass(odd=cusp(4, k)),
    )


@lru_cache(maxsize=None)
def ec_A1(c: int) -> MotiveClass:
    """``e_c(A_1, V_c)``: ``L`` for ``c = 0``, ``-S[1,c+2] - 1`` for even ``c > 0``."""
    if c < 0:
        raise ValueError(f"invalid weight {c}")
    if c % 2:
        return ZERO
    if c == 0:
        return L
    return -cusp(1, c + 2) - 1


@lru_cache(maxsize=None)
def ec_E2(u: WreathLabel) -> MotiveClass:
    """``e_c(E_2, u)`` via Kuenneth on ``Y(2) x Y(2)``.

    All S3-irreducibles are real, so S3-invariants pair each isotypic piece
    with itself.  For ``U_{a,b}`` the swap then just picks one of two copies;
    for ``U_a^pm`` it takes signed swap-invariants of the square.
    """
    if isinstance(u, Pair):
        ya, yb = ec_Y2(u.a), ec_Y2(u.b)
        return sum((ya[rho].euler() * yb[rho].euler() for rho, _ in ya.items()), ZERO)
    ya = ec_Y2(u.a)
    return sum((super_invariants(g, u.sign).euler() for _, g in ya.items()), ZERO)


@lru_cache(maxsize=None)
def ec_Delta(u: WreathLabel) -> MotiveClass:
    """``e_c(Delta, u)`` through the level-one curve.

    Restrict to ``Sp(2) x S2``, keep the S2-invariant summands and descend to
    ``A_1``.  Summands ``V_c`` are Tate-twisted by ``(weight(u) - c)/2``.
    Vanishes unless every index of ``u`` is even.
    """
    if u.a % 2 or (isinstance(u, Pair) and u.b % 2):
        return ZERO
    out = ZERO
    for c, sign in branch_wreath_to_diagonal(u):
        if sign == "+":
            out = out + L ** ((u.weight - c) // 2) * ec_A1(c)
    return out


def ec_wreath(w: WreathClass) -> MotiveClass:
    """``e_c(E_2, -) - e_c(Delta, -)`` extended linearly over twisted terms."""
    out = ZERO
    for (label, t), n in w.items():
        out = out + L**t * (ec_E2(label) - ec_Delta(label)) * n
    return out


@lru_cache(maxsize=None)
def ec_M_label(l: int, m: int) -> MotiveClass:
    """``e_c(M, W_{l,m})`` where ``M`` is the bi-elliptic locus ``E_2 - Delta``."""
    return ec_wreath(twisted_pullback(l, m))


def ec_M(v: VirtualSp4Class) -> MotiveClass:
    """Linear extension of :func:`ec_M_label` with ``L^t`` for twists."""
    out = ZERO
    for (l, m, t), n in v.items():
        if not isinstance(n, int):
            raise ArithmeticError(f"non-integral multiplicity {n} for W[{l},{m}]")
        out = out + L**t * ec_M_label(l, m) * n
    return out


def ec_trivial_independent() -> MotiveClass:
    """``e_c(M)`` for the constant system, bypassing the wreath machinery.

    ``e_c(Y(2)) = [X(2)] - [cusps]`` is taken as an S3 class function with
    values in ``Z[L]``; invariants of its square under ``S3 x S2`` come from
    averaging over the 12 group elements.  An element ``(g, swap)`` has trace
    ``psi2(chi(g^2))`` on the square.  The diagonal contributes the coarse
    curve ``A_1``, whose class is ``L``.
    """
    classes = ("1", "(12)", "(123)")
    sizes = {"1": 1, "(12)": 3, "(123)": 2}
    square = {"1": "1", "(12)": "1", "(123)": "(123)"}
    _, _, perm_char = cusp_count_gamma2()
    # X(2) is a projective line with trivial S3 action on its cohomology
    chi = {g: (1 + L) - perm_char[g] for g in classes}
    total = ZERO
    for g in classes:
        total = total + (chi[g] * chi[g] + psi2(chi[square[g]])) * sizes[g]
    terms = {}
    for mono, c in total.items():
        if c % 12:
            raise ArithmeticError(f"{total} is not divisible by 12")
        terms[mono] = c // 12
    return MotiveClass(terms) - L
