"""Brute-force checks in ``SL2(Z/d)``.

Every ``A`` in ``SL2(Z/d)`` should be conjugate to its inverse by some ``eps``
of determinant ``-1``.  Consequently, for a fixed ``eps`` of determinant
``-1``, ``g^-1`` and ``eps g eps^-1`` always lie in the same conjugacy class,
which is what makes conjugation by ``eps`` act on representations as duality.
Both statements are checked exhaustively for small moduli.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

import numpy as np

__all__ = [
    "MAX_D",
    "DualityReport",
    "Mat2Mod",
    "conjugacy_classes",
    "enumerate_sl2",
    "find_conjugator",
    "find_eps_conjugator",
    "sl2_order",
    "verify_dual_property",
]

MAX_D = int(os.environ.get("BIELLIPTIC_MAX_D", 12))


@dataclass(frozen=True)
class Mat2Mod:
    """The matrix ``[[a, b], [c, d]]`` with entries reduced mod ``n``."""

    a: int
    b: int
    c: int
    d: int
    n: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.n)

    @classmethod
    def from_rows(cls, rows, n: int) -> "Mat2Mod":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, n)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.n

    def __matmul__(self, o: "Mat2Mod") -> "Mat2Mod":
        return Mat2Mod(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.n,
        )

    def inverse(self) -> "Mat2Mod":
        det = self.det()
        inv = pow(det, -1, self.n)
        return Mat2Mod(inv * self.d, -inv * self.b, -inv * self.c, inv * self.a, self.n)


def _primes(d: int) -> list[int]:
    out, p = [], 2
    while p * p <= d:
        if d % p == 0:
            out.append(p)
            while d % p == 0:
                d //= p
        p += 1
    if d > 1:
        out.append(d)
    return out


def sl2_order(d: int) -> int:
    """``|SL2(Z/d)| = d^3 prod_{p | d} (1 - p^-2)``."""
    return d**3 * prod(p * p - 1 for p in _primes(d)) // prod(p * p for p in _primes(d))


def _check_modulus(d: int) -> None:
    if not 2 <= d <= MAX_D:
        raise ValueError(f"modulus must lie in [2, {MAX_D}], got {d}")


@lru_cache(maxsize=None)
def _matrices_with_det(d: int, det: int) -> np.ndarray:
    # rows (a, b, c, d') of all 2x2 matrices mod d with the given determinant
    r = np.arange(d)
    a, b, c, e = (x.ravel() for x in np.meshgrid(r, r, r, r, indexing="ij"))
    keep = (a * e - b * c) % d == det % d
    return np.stack([a[keep], b[keep], c[keep], e[keep]], axis=1)


def enumerate_sl2(d: int) -> list[Mat2Mod]:
    _check_modulus(d)
    return [Mat2Mod(*map(int, row), d) for row in _matrices_with_det(d, 1)]


def find_conjugator(A: Mat2Mod, det: int = -1) -> Mat2Mod | None:
    """Some ``X`` with ``det X = det`` and ``X A X^-1 = A^-1``, or ``None``.

    The search is exhaustive over all matrices of that determinant.
    """
    n = A.n
    X = _matrices_with_det(n, det)
    Ai = A.inverse()
    x0, x1, x2, x3 = X.T
    a, b, c, e = A.entries
    p, q, r, s = Ai.entries
    # X A == A^-1 X, entrywise mod n
    ok = (
        ((x0 * a + x1 * c - p * x0 - q * x2) % n == 0)
        & ((x0 * b + x1 * e - p * x1 - q * x3) % n == 0)
        & ((x2 * a + x3 * c - r * x0 - s * x2) % n == 0)
        & ((x2 * b + x3 * e - r * x1 - s * x3) % n == 0)
    )
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return None
    return Mat2Mod(*map(int, X[hits[0]]), n)


def find_eps_conjugator(A: Mat2Mod) -> Mat2Mod | None:
    """Some ``eps`` of determinant ``-1`` with ``eps A eps^-1 = A^-1``."""
    if A.det() != 1 % A.n:
        raise ValueError("A must have determinant 1")
    return find_conjugator(A, det=-1)


def conjugacy_classes(d: int) -> dict[Mat2Mod, int]:
    """Map each element of ``SL2(Z/d)`` to the index of its conjugacy class.

    Classes are orbits under conjugation by ``S`` and ``T``, which generate
    ``SL2(Z/d)`` because ``SL2(Z) -> SL2(Z/d)`` is onto.
    """
    elems = enumerate_sl2(d)
    index = {g: i for i, g in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    S = Mat2Mod(0, -1, 1, 0, d)
    T = Mat2Mod(1, 1, 0, 1, d)
    gens = [(S, S.inverse()), (T, T.inverse())]
    for g, i in index.items():
        for h, hi in gens:
            j = index[h @ g @ hi]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    roots: dict[int, int] = {}
    return {g: roots.setdefault(find(i), len(roots)) for g, i in index.items()}


@dataclass
class DualityReport:
    d: int
    order: int
    classes: int
    missing_conjugator: list[Mat2Mod] = field(default_factory=list)
    class_mismatch: list[Mat2Mod] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missing_conjugator and not self.class_mismatch

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "order": self.order,
            "classes": self.classes,
            "passed": self.passed,
            "missing_conjugator": [list(g.entries) for g in self.missing_conjugator],
            "class_mismatch": [list(g.entries) for g in self.class_mismatch],
        }


def verify_dual_property(d: int) -> DualityReport:
    """Check both the per-element conjugator and the class-level statement.

    For each ``g``: some ``eps`` of determinant ``-1`` inverts it, and for the
    fixed ``eps0 = diag(1, -1)`` the elements ``g^-1`` and ``eps0 g eps0^-1``
    are conjugate.
    """
    _check_modulus(d)
    cls = conjugacy_classes(d)
    eps0 = Mat2Mod(1, 0, 0, -1, d)
    report = DualityReport(d=d, order=len(cls), classes=len(set(cls.values())))
    for g in cls:
        if find_eps_conjugator(g) is None:
            report.missing_conjugator.append(g)
        if cls[g.inverse()] != cls[eps0 @ g @ eps0.inverse()]:
            report.class_mismatch.append(g)
    return report
