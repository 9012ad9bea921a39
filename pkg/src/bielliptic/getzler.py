"""Getzler's generating function for relative configuration spaces.

For a family of curves ``X -> M`` with fibre class ``e = e_M(X)``,

    sum_n e^{S_n}(F(X/M, n)) = prod_{k >= 1} (1 + p_k)^{c_k},
    c_k = (1/k) sum_{d | k} mu(k/d) psi_d(e),

expanded as binomial series in the power sums ``p_k``.  Coefficients live in
the representation ring of Sp(4) with Tate twists; for the universal genus-2
curve ``e = 1 - W + L``.  Pairing with Schur functions (Murnaghan-Nakayama)
gives the coefficient of each irreducible ``s_lambda`` of ``S_n``, and pushing
forward to the bi-elliptic locus gives Euler classes of pointed bi-elliptic
curves.
"""
from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator

from sympy import divisors, mobius

from .cohomology import ec_M
from .motives import MotiveClass
from .weylchars import Laurent, VirtualSp4Class, W, decompose_weighted_character

__all__ = [
    "MAX_N",
    "Partition",
    "SymFuncSeries",
    "character_value",
    "euler_Bn",
    "expand_generating_function",
    "exponent_c",
    "partitions",
    "schur_coefficient",
    "universal_curve_class",
]

MAX_N = int(os.environ.get("BIELLIPTIC_MAX_N", 8))

Partition = tuple  # weakly decreasing tuple of positive ints


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _multiplicities(mu: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in mu:
        out[part] = out.get(part, 0) + 1
    return out


@lru_cache(maxsize=None)
def character_value(lam: Partition, mu: Partition) -> int:
    """``chi^lam(mu)`` by the Murnaghan-Nakayama rule.

    Rim hooks are removed on the beta-set of ``lam``: a hook of length ``r``
    moves a bead from ``b`` to a free position ``b - r``, with sign
    ``(-1)^(beads strictly between)``.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"{lam} and {mu} have different sizes")
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    n = len(lam)
    beta = [lam[i] + n - 1 - i for i in range(n)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        between = sum(1 for x in beads if target < x < b)
        new = sorted((beads - {b}) | {target}, reverse=True)
        shape = tuple(x - (n - 1 - i) for i, x in enumerate(new))
        shape = tuple(p for p in shape if p > 0)
        total += (-1) ** between * character_value(shape, rest)
    return total


def universal_curve_class() -> VirtualSp4Class:
    """``e_c`` of a genus-2 fibre: ``1 - W + L``."""
    return W(0, 0) - W(1, 0) + W(0, 0, 1)


@lru_cache(maxsize=None)
def _exponent_character(k: int) -> Laurent:
    base = universal_curve_class().weighted_character()
    out = Laurent(nvars=3)
    for d in divisors(k):
        mu = int(mobius(k // d))
        if mu:
            out = out + base.dilate(d) * mu
    return out / k


def exponent_c(k: int) -> VirtualSp4Class:
    """``c_k = (1/k) sum_{d | k} mu(k/d) psi_d(e)``, rational multiplicities."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return decompose_weighted_character(_exponent_character(k))


@lru_cache(maxsize=None)
def _binomial_character(k: int, j: int) -> Laurent:
    # binomial(c_k, j) = c_k (c_k - 1) ... (c_k - j + 1) / j!
    c = _exponent_character(k)
    out = Laurent.constant(1, 3)
    for i in range(j):
        out = out * (c - i)
    return out / factorial(j)


@lru_cache(maxsize=None)
def _power_sum_character(mu: Partition) -> Laurent:
    out = Laurent.constant(1, 3)
    for k, j in sorted(_multiplicities(mu).items()):
        out = out * _binomial_character(k, j)
    return out


class SymFuncSeries:
    """Truncated symmetric function ``sum_mu f_mu p_mu`` with class coefficients."""

    def __init__(self, coeffs: dict[Partition, VirtualSp4Class], degree: int):
        for mu in coeffs:
            if sum(mu) > degree:
                raise ValueError(f"p_{mu} exceeds truncation degree {degree}")
        self.coeffs = coeffs
        self.degree = degree

    def __getitem__(self, mu: Partition) -> VirtualSp4Class:
        return self.coeffs.get(tuple(mu), VirtualSp4Class())

    def __repr__(self):
        return f"SymFuncSeries(degree={self.degree}, terms={len(self.coeffs)})"


def expand_generating_function(N: int) -> SymFuncSeries:
    """All ``p_mu`` coefficients with ``|mu| <= N``.

    The coefficient of ``p_mu`` is ``prod_k binomial(c_k, m_k(mu))`` where
    ``m_k(mu)`` counts parts equal to ``k``.
    """
    if N < 0:
        raise ValueError("degree must be non-negative")
    coeffs = {}
    for n in range(N + 1):
        for mu in partitions(n):
            coeffs[mu] = decompose_weighted_character(_power_sum_character(mu))
    return SymFuncSeries(coeffs, N)


def _schur_character(lam: Partition) -> Laurent:
    out = Laurent(nvars=3)
    for mu in partitions(sum(lam)):
        chi = character_value(lam, mu)
        if chi:
            out = out + _power_sum_character(mu) * chi
    return out


@lru_cache(maxsize=None)
def _schur_class(lam: Partition) -> VirtualSp4Class:
    v = decompose_weighted_character(_schur_character(lam))
    if not v.is_integral():
        raise ArithmeticError(f"non-integral Schur coefficient for s_{lam}: {v}")
    return v


def schur_coefficient(series: SymFuncSeries | None, lam: Partition) -> VirtualSp4Class:
    """Coefficient of ``s_lam``: ``sum_mu f_mu chi^lam(mu)``; must be integral.

    With ``series=None`` the coefficient is computed directly, without
    materializing the whole expansion.
    """
    lam = tuple(lam)
    if series is None:
        return _schur_class(lam)
    if sum(lam) > series.degree:
        raise ValueError(f"s_{lam} lies beyond truncation degree {series.degree}")
    out = VirtualSp4Class()
    for mu in partitions(sum(lam)):
        chi = character_value(lam, mu)
        if chi:
            out = out + series[mu] * chi
    if not out.is_integral():
        raise ArithmeticError(f"non-integral Schur coefficient for s_{lam}: {out}")
    return VirtualSp4Class({k: int(Fraction(c)) for k, c in out.items()})


def euler_Bn(n: int) -> dict[Partition, MotiveClass]:
    """S_n-equivariant compactly supported Euler class of n-pointed bi-elliptic curves.

    Keys are partitions of ``n`` in the order ``(n), (n-1, 1), ...``.
    """
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n must lie in [0, {MAX_N}], got {n}")
    return {lam: ec_M(schur_coefficient(None, lam)) for lam in partitions(n)}
