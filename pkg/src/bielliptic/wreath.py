"""Representations of Sp(2) wr S2 and the two branching maps.

The irreducibles of ``Sp(2) wr S2 = (Sp(2) x Sp(2)) x| S2`` are the induced
representations ``U_{a,b}`` (``a > b``) and the two extensions ``U_a^+``,
``U_a^-`` of ``V_a (x) V_a``.  We branch ``W_{l,m}`` from Sp(4) down to the
wreath product, and wreath irreducibles further down to the diagonal
``Sp(2) x S2``.  Each branching has a character oracle alongside it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Union

from .weylchars import (
    Laurent,
    _check_label,
    sp2_character,
    sp2_dim,
    sp2_tensor,
    sp4_character,
)

__all__ = [
    "Diag",
    "Pair",
    "SignedSp2Label",
    "WreathClass",
    "WreathLabel",
    "U",
    "branch_sp4_to_wreath",
    "branch_wreath_to_diagonal",
    "diagonal_swap_trace",
    "parse_wreath_label",
    "tensor_defining",
    "torus_character_of_restriction",
    "twisted_character_of_restriction",
    "twisted_pullback",
    "wreath_dim",
    "wreath_torus_character",
    "wreath_twisted_character",
]


@dataclass(frozen=True, order=True)
class Pair:
    """The induced irreducible ``U_{a,b}``, always with ``a > b >= 0``."""

    a: int
    b: int

    def __post_init__(self):
        if not self.a > self.b >= 0:
            raise ValueError(f"Pair label needs a > b >= 0, got ({self.a}, {self.b})")

    @property
    def weight(self) -> int:
        return self.a + self.b

    def __str__(self):
        return f"U{self.a},{self.b}"


@dataclass(frozen=True, order=True)
class Diag:
    """``U_a^+`` or ``U_a^-``: ``V_a (x) V_a`` with the (signed) swap."""

    a: int
    sign: str

    def __post_init__(self):
        if self.a < 0 or self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"invalid Diag label ({self.a}, {self.sign!r})")

    @property
    def weight(self) -> int:
        return 2 * self.a

    def __str__(self):
        return f"U{self.a}{self.sign}"


WreathLabel = Union[Pair, Diag]


def parse_wreath_label(s: str) -> WreathLabel:
    """Parse ``"U2,1"``, ``"U3+"`` or ``"U0-"``."""
    body = s.strip()
    if body[:1] in "uU":
        body = body[1:]
    if body.endswith(("+", "-")):
        return Diag(int(body[:-1]), body[-1])
    a, b = (int(x) for x in body.split(","))
    return Pair(a, b)


def wreath_dim(u: WreathLabel) -> int:
    if isinstance(u, Pair):
        return 2 * sp2_dim(u.a) * sp2_dim(u.b)
    return sp2_dim(u.a) ** 2


def _sort_key(item):
    label, t = item
    return (label.weight, isinstance(label, Diag), label.a, getattr(label, "b", 0), getattr(label, "sign", ""), t)


class WreathClass:
    """Virtual combination of twisted wreath irreducibles ``(label, t) -> n``."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[WreathLabel, int], int] | None = None):
        clean: dict = {}
        for key, c in (terms or {}).items():
            clean[key] = clean.get(key, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, WreathClass):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other):
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return WreathClass(out)

    def __neg__(self):
        return WreathClass({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n: int):
        return WreathClass({k: c * n for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (label, t), c in self.items():
            twist = f"(-{t})" if t else ""
            parts.append(f"{c}*{label}{twist}")
        return " + ".join(parts)

    def untwisted(self) -> "WreathClass":
        out: dict = {}
        for (label, _), c in self._terms.items():
            out[(label, 0)] = out.get((label, 0), 0) + c
        return WreathClass(out)

    def dim(self) -> int:
        return sum(c * wreath_dim(label) for (label, _), c in self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"label": str(label), "twist": t, "coeff": c} for (label, t), c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "WreathClass":
        return cls({(parse_wreath_label(d["label"]), d["twist"]): d["coeff"] for d in data})


def U(a: int, b: int, t: int = 0, coeff: int = 1) -> WreathClass:
    """``U_{a,b}(-t)`` with the usual conventions.

    Indices are unordered, ``U_{a,a} = U_a^+ + U_a^-`` and a negative index
    gives zero.
    """
    if a < 0 or b < 0:
        return WreathClass()
    if a == b:
        return WreathClass({(Diag(a, "+"), t): coeff, (Diag(a, "-"), t): coeff})
    return WreathClass({(Pair(max(a, b), min(a, b)), t): coeff})


def _branch_terms(l: int, m: int) -> list[WreathLabel]:
    # Closed form of the restriction Sp(4) -> Sp(2) wr S2.
    _check_label(l, m)
    out: list[WreathLabel] = []
    half = (l - m) / 2
    for i in range(m + 1):
        if (l + m) % 2 == 0:
            out.append(Diag((l - m) // 2 + i, "+" if m % 2 == 0 else "-"))
        j = 0
        while j < half:
            out.append(Pair(l - m + i - j, i + j))
            j += 1
    return out


def branch_sp4_to_wreath(l: int, m: int) -> WreathClass:
    """Restriction of ``W_{l,m}`` to ``Sp(2) wr S2``, all twists zero."""
    out: dict = {}
    for label in _branch_terms(l, m):
        out[(label, 0)] = out.get((label, 0), 0) + 1
    return WreathClass(out)


def twisted_pullback(l: int, m: int) -> WreathClass:
    """Restriction with Tate twists making every term weight ``l + m``.

    ``U_{a,b}`` gets twist ``(l+m-a-b)/2`` and ``U_a^pm`` gets ``(l+m-2a)/2``.
    """
    out: dict = {}
    for label in _branch_terms(l, m):
        gap = l + m - label.weight
        if gap < 0 or gap % 2:
            raise AssertionError(f"non-homogeneous term {label} in W_{{{l},{m}}}")
        key = (label, gap // 2)
        out[key] = out.get(key, 0) + 1
    return WreathClass(out)


def tensor_defining(w: WreathClass) -> WreathClass:
    """Tensor with ``U_{1,0}`` using the elementary wreath rules (twists kept)."""
    out = WreathClass()
    for (label, t), c in w.items():
        if isinstance(label, Pair):
            a, b = label.a, label.b
            out = out + (U(a + 1, b, t) + U(a, b + 1, t) + U(a - 1, b, t) + U(a, b - 1, t)) * c
        else:
            a = label.a
            out = out + (U(a + 1, a, t) + U(a, a - 1, t)) * c
    return out


class SignedSp2Label(NamedTuple):
    """``V_a`` tensored with the trivial (``+``) or sign (``-``) character of S2."""

    a: int
    sign: str


def branch_wreath_to_diagonal(u: WreathLabel) -> list[SignedSp2Label]:
    """Restriction to the diagonal ``Sp(2) x S2``.

    ``U_{a,b}`` gives one invariant and one anti-invariant copy of
    ``V_a (x) V_b``.  ``U_a^+`` gives ``V_{2(a-k)}`` with sign ``(-1)^k`` for
    ``k = 0..a``, and ``U_a^-`` the opposite signs.  The summand ``V_c`` sits
    ``(weight(u) - c)/2`` Tate twists below the top.
    """
    if isinstance(u, Pair):
        out = []
        for c in sp2_tensor(u.a, u.b):
            out += [SignedSp2Label(c, "+"), SignedSp2Label(c, "-")]
        return out
    flip = 0 if u.sign == "+" else 1
    return [
        SignedSp2Label(2 * (u.a - k), "+" if (k + flip) % 2 == 0 else "-")
        for k in range(u.a + 1)
    ]


# ---------------------------------------------------------------------------
# Character oracles


def _sp2_pair(a: int, b: int) -> Laurent:
    # chi_a(x) chi_b(y) as a polynomial in (x, y)
    ca, cb = sp2_character(a), sp2_character(b)
    return Laurent({(e, f): c * d for (e,), c in ca.items() for (f,), d in cb.items()}, nvars=2)


def torus_character_of_restriction(l: int, m: int) -> Laurent:
    """Character of ``W_{l,m}`` on the torus of ``Sp(2) x Sp(2)``.

    The two maximal tori coincide, so this is the Sp(4) character read in the
    coordinates ``(x, y)`` of the two factors.
    """
    return sp4_character(l, m)


def wreath_torus_character(w: WreathClass) -> Laurent:
    out = Laurent(nvars=2)
    for (label, _), c in w.items():
        if isinstance(label, Pair):
            out = out + (_sp2_pair(label.a, label.b) + _sp2_pair(label.b, label.a)) * c
        else:
            out = out + _sp2_pair(label.a, label.a) * c
    return out


def twisted_character_of_restriction(l: int, m: int) -> Laurent:
    """Trace of ``swap . (g, g)`` on ``W_{l,m}``, as a polynomial in ``x``.

    That element has eigenvalues ``x, 1/x, -x, -1/x`` on the 4-dimensional
    representation, so the trace is the Sp(4) character at ``(x, -x)``.
    """
    return sp4_character(l, m).specialize(
        lambda e: ((-1) ** (e[1] % 2), (e[0] + e[1],)), nvars=1
    )


def wreath_twisted_character(w: WreathClass) -> Laurent:
    """Same trace computed on the wreath side.

    Induced ``U_{a,b}`` contribute nothing; ``U_a^pm`` contribute ``pm chi_a(x^2)``.
    """
    out = Laurent(nvars=1)
    for (label, _), c in w.items():
        if isinstance(label, Diag):
            s = 1 if label.sign == "+" else -1
            out = out + sp2_character(label.a).dilate(2) * (s * c)
    return out


def diagonal_swap_trace(u: WreathLabel) -> tuple[Laurent, Laurent]:
    """Trace of ``(g, swap)`` on ``u``, computed on both sides of the branching.

    Returns ``(direct, branched)``: the direct value is ``pm chi_a(x^2)`` for
    ``U_a^pm`` and zero for ``U_{a,b}``; the branched value is
    ``sum sign * chi_c(x)`` over :func:`branch_wreath_to_diagonal`.
    """
    if isinstance(u, Pair):
        direct = Laurent(nvars=1)
    else:
        s = 1 if u.sign == "+" else -1
        direct = sp2_character(u.a).dilate(2) * s
    branched = Laurent(nvars=1)
    for c, sign in branch_wreath_to_diagonal(u):
        branched = branched + sp2_character(c) * (1 if sign == "+" else -1)
    return direct, branched
