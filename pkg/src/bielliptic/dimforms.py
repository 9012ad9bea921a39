"""Dimensions of spaces of modular forms at levels 1, 2 and 4.

Only the groups needed for the level-2 computation are supported:
``SL2(Z)``, ``Gamma0(2)``, ``Gamma0(4)`` and ``Gamma(2)`` (which is conjugate
to ``Gamma0(4)``).  All four have genus zero, so the cusp-form dimension in
even weight ``k >= 4`` is

    (k - 1)(g - 1) + (k/2 - 1) * cusps + floor(k/4) * e2 + floor(k/3) * e3

with ``g = 0`` and the elliptic-point counts hard-coded below.
"""
from __future__ import annotations

from typing import NamedTuple

__all__ = [
    "GROUPS",
    "GroupData",
    "S3Multiplicity",
    "cusp_count_gamma2",
    "dim_cusp",
    "dim_eisenstein",
    "dim_new",
    "equivariant_cusp_dims",
]


class GroupData(NamedTuple):
    genus: int
    cusps: int
    e2: int
    e3: int


GROUPS: dict[str, GroupData] = {
    "G1": GroupData(0, 1, 1, 1),
    "G0(2)": GroupData(0, 2, 1, 0),
    "G0(4)": GroupData(0, 3, 0, 0),
    "G(2)": GroupData(0, 3, 0, 0),
}

_ALIASES = {
    "1": "G1", "g1": "G1", "gamma": "G1", "sl2z": "G1", "gamma(1)": "G1",
    "g0(2)": "G0(2)", "gamma0(2)": "G0(2)",
    "g0(4)": "G0(4)", "gamma0(4)": "G0(4)",
    "g(2)": "G(2)", "gamma(2)": "G(2)",
}

_LEVEL_GROUP = {1: "G1", 2: "G0(2)", 4: "G0(4)"}


def _group(g: str) -> GroupData:
    key = _ALIASES.get(g.strip().lower(), g)
    if key not in GROUPS:
        raise ValueError(f"unsupported group {g!r}; choose from {sorted(GROUPS)}")
    return GROUPS[key]


def dim_cusp(g: str, k: int) -> int:
    """Dimension of ``S_k`` for one of the supported groups.

    Odd weights vanish since every group contains ``-I``; weight 2 gives the
    genus; weights below 2 give zero.
    """
    if k < 0:
        raise ValueError(f"weight must be non-negative, got {k}")
    data = _group(g)
    if k % 2 or k < 2:
        return 0
    if k == 2:
        return data.genus
    return (
        (k - 1) * (data.genus - 1)
        + (k // 2 - 1) * data.cusps
        + (k // 4) * data.e2
        + (k // 3) * data.e3
    )


def dim_eisenstein(g: str, k: int) -> int:
    """Dimension of the Eisenstein space ``E_k``; all cusps here are regular."""
    data = _group(g)
    if k % 2 or k < 2:
        return 0
    if k == 2:
        return data.cusps - 1
    return data.cusps


def dim_new(N: int, k: int) -> int:
    """Dimension of the newforms in ``S_k(Gamma0(N))`` for ``N`` in 1, 2, 4.

    Solves ``dim S_k(Gamma0(N)) = sum_{M | N} d(N/M) dim S_k^new(Gamma0(M))``.
    """
    if N not in _LEVEL_GROUP:
        raise ValueError(f"level must be 1, 2 or 4, got {N}")
    new1 = dim_cusp("G1", k)
    if N == 1:
        return new1
    new2 = dim_cusp("G0(2)", k) - 2 * new1
    if N == 2:
        out = new2
    else:
        out = dim_cusp("G0(4)", k) - 2 * new2 - 3 * new1
    if out < 0 or new2 < 0:
        raise ArithmeticError(f"negative newform dimension at level {N}, weight {k}")
    return out


class S3Multiplicity(NamedTuple):
    """Multiplicities of the trivial, standard and sign representations of S3."""

    s3: int
    s21: int
    s111: int

    def dim(self) -> int:
        return self.s3 + 2 * self.s21 + self.s111


def equivariant_cusp_dims(k: int) -> S3Multiplicity:
    """Decomposition of ``S_k(Gamma(2))`` under ``SL2(Z/2) = S3``.

    The invariants are the level-one forms and the sign part is the newforms
    of ``Gamma0(4)``.  The standard part holds the newforms of ``Gamma0(2)``
    and also one copy per level-one eigenform ``f``: the three conjugates
    ``f(tau/2), f((tau+1)/2), f(2 tau)`` span ``s3 + s21``.
    """
    if k % 2:
        return S3Multiplicity(0, 0, 0)
    new1 = dim_new(1, k)
    return S3Multiplicity(new1, new1 + dim_new(2, k), dim_new(4, k))


def cusp_count_gamma2() -> tuple[int, S3Multiplicity, dict[str, int]]:
    """Cusps of ``X(2)`` and their S3 permutation representation.

    Returns the count, the decomposition ``s3 + s21`` and the permutation
    character on the classes (identity, transposition, 3-cycle).
    """
    cusps = GROUPS["G(2)"].cusps
    return cusps, S3Multiplicity(1, 1, 0), {"1": 3, "(12)": 1, "(123)": 0}
