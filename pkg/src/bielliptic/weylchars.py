"""Exact character arithmetic for Sp(2) and Sp(4).

Irreducible representations of Sp(2) are the symmetric powers ``V_a`` of the
defining representation; those of Sp(4) are indexed by highest weights
``l >= m >= 0`` and written ``W_{l,m}``.  Characters are Laurent polynomials in
the torus coordinates ``(x1, x2)`` and every closed-form rule in this module
(dimension formula, Pieri rule, Clebsch-Gordan) can be checked against them.

Virtual classes carry a Tate twist ``t`` next to the highest weight, so that
``W_{l,m}(-t)`` is a pure object of Hodge weight ``l + m + 2t``.  Products and
Adams operations assign twists by homogeneity in that weight.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

__all__ = [
    "Laurent",
    "Sp2Label",
    "Sp4Label",
    "VirtualSp4Class",
    "W",
    "adams",
    "decompose_character",
    "decompose_weighted_character",
    "sp2_character",
    "sp2_dim",
    "sp2_tensor",
    "sp4_character",
    "sp4_dim",
    "sp4_pieri",
    "sp4_tensor",
    "weyl_numerator",
]


def _normalize(c):
    """Demote integral Fractions to int so equality and hashing stay simple."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Laurent:
    """Finitely supported Laurent polynomial in ``nvars`` variables.

    Coefficients are ints or Fractions.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[tuple, Rational] | None = None, nvars: int = 2):
        self.nvars = nvars
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have {nvars} entries")
                clean[tuple(exp)] = _normalize(c)
        self._terms = clean

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: Rational = 1) -> "Laurent":
        exp = tuple(exp)
        return cls({exp: coeff}, nvars=len(exp))

    @classmethod
    def constant(cls, c: Rational, nvars: int = 2) -> "Laurent":
        return cls({(0,) * nvars: c}, nvars=nvars)

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def coeff(self, exp) -> Rational:
        return self._terms.get(tuple(exp), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._terms)

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.nvars != self.nvars:
                raise ValueError("mismatched number of variables")
            return other
        if isinstance(other, Rational):
            return Laurent.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Laurent({e: c * other for e, c in self._terms.items()}, self.nvars)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, k: Rational):
        return Laurent({e: Fraction(c) / k for e, c in self._terms.items()}, self.nvars)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = Laurent.constant(1, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Laurent.constant(other, self.nvars)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return "Laurent(0)"
        return f"Laurent({dict(sorted(self._terms.items(), reverse=True))})"

    def map_exponents(self, f: Callable[[tuple], tuple], nvars: int | None = None) -> "Laurent":
        """Push every monomial through ``f``; colliding terms are summed."""
        out: dict = {}
        for e, c in self._terms.items():
            e2 = tuple(f(e))
            out[e2] = out.get(e2, 0) + c
        return Laurent(out, self.nvars if nvars is None else nvars)

    def dilate(self, d: int) -> "Laurent":
        """Substitute ``x_i -> x_i**d`` in every variable."""
        return self.map_exponents(lambda e: tuple(d * a for a in e))

    def specialize(self, f: Callable[[tuple], tuple[int, tuple]], nvars: int) -> "Laurent":
        """Like :meth:`map_exponents` but ``f`` also returns a sign per monomial."""
        out: dict = {}
        for e, c in self._terms.items():
            s, e2 = f(e)
            out[e2] = out.get(e2, 0) + s * c
        return Laurent(out, nvars)

    def evaluate(self, point: Iterable[Rational]):
        point = tuple(Fraction(p) for p in point)
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for x, a in zip(point, e):
                term *= x**a
            total += term
        return _normalize(total)

    def is_weyl_invariant(self) -> bool:
        """Invariance under sign changes and the swap of the first two exponents."""
        for e, c in self._terms.items():
            e1, e2, *rest = e
            for f1, f2 in ((e1, e2), (e2, e1)):
                for s1, s2 in product((1, -1), repeat=2):
                    if self._terms.get((s1 * f1, s2 * f2, *rest), 0) != c:
                        return False
        return True


# ---------------------------------------------------------------------------
# Sp(2)


class Sp2Label(NamedTuple):
    a: int


def sp2_dim(a: int) -> int:
    if a < 0:
        raise ValueError(f"invalid Sp(2) weight {a}")
    return a + 1


def sp2_character(a: int) -> Laurent:
    """Character of ``V_a``: ``x^a + x^(a-2) + ... + x^-a``."""
    if a < 0:
        raise ValueError(f"invalid Sp(2) weight {a}")
    return Laurent({(a - 2 * j,): 1 for j in range(a + 1)}, nvars=1)


def sp2_tensor(a: int, b: int) -> list[int]:
    """Clebsch-Gordan: ``V_a (x) V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}``."""
    if a < 0 or b < 0:
        raise ValueError("invalid Sp(2) weight")
    return list(range(a + b, abs(a - b) - 1, -2))


# ---------------------------------------------------------------------------
# Sp(4)


class Sp4Label(NamedTuple):
    l: int
    m: int

    @property
    def valid(self) -> bool:
        return self.l >= self.m >= 0


def _check_label(l: int, m: int) -> None:
    if not l >= m >= 0:
        raise ValueError(f"invalid Sp(4) highest weight ({l}, {m})")


def sp4_dim(l: int, m: int) -> int:
    """Weyl dimension formula for type C2."""
    _check_label(l, m)
    return (l - m + 1) * (m + 1) * (l + 2) * (l + m + 3) // 6


@lru_cache(maxsize=None)
def _complete_homogeneous(k: int) -> Laurent:
    # h_k in the four torus eigenvalues x1, 1/x1, x2, 1/x2
    if k < 0:
        return Laurent(nvars=2)
    terms: dict = {}
    for i in range(k + 1):
        for j in range(k + 1 - i):
            for p in range(k + 1 - i - j):
                q = k - i - j - p
                e = (i - j, p - q)
                terms[e] = terms.get(e, 0) + 1
    return Laurent(terms, nvars=2)


@lru_cache(maxsize=None)
def sp4_character(l: int, m: int) -> Laurent:
    """Character of ``W_{l,m}`` as a Laurent polynomial in ``(x1, x2)``.

    Uses the symplectic Jacobi-Trudi determinant
    ``h_l h_m + h_l h_{m-2} - h_{l+1} h_{m-1} - h_{l-1} h_{m-1}``.
    """
    _check_label(l, m)
    h = _complete_homogeneous
    return h(l) * h(m) + h(l) * h(m - 2) - h(l + 1) * h(m - 1) - h(l - 1) * h(m - 1)


_WEYL_C2 = [
    (perm, signs)
    for perm in permutations(range(2))
    for signs in product((1, -1), repeat=2)
]


def weyl_numerator(mu: tuple[int, int]) -> Laurent:
    """Alternating sum ``sum_w sign(w) x^(w mu)`` over the Weyl group of C2."""
    terms: dict = {}
    for perm, signs in _WEYL_C2:
        sign = signs[0] * signs[1] * (1 if perm == (0, 1) else -1)
        e = (signs[0] * mu[perm[0]], signs[1] * mu[perm[1]])
        terms[e] = terms.get(e, 0) + sign
    return Laurent(terms, nvars=2)


def _dominant_top(c: Laurent, extra: tuple = ()) -> tuple | None:
    best = None
    for e in c.support():
        if e[2:] != extra:
            continue
        if e[0] >= e[1] >= 0 and (best is None or e[:2] > best):
            best = e[:2]
    return best


def decompose_character(c: Laurent) -> "VirtualSp4Class":
    """Write a Weyl-invariant character as a virtual sum of ``W_{l,m}``.

    Greedy extraction: peel off the lexicographically largest dominant weight.
    """
    if c.nvars != 2:
        raise ValueError("expected a character in two variables")
    if not c.is_weyl_invariant():
        raise ValueError("character is not Weyl-group invariant")
    out: dict = {}
    rest = c
    while rest:
        top = _dominant_top(rest)
        k = rest.coeff(top)
        out[(top[0], top[1], 0)] = k
        rest = rest - sp4_character(*top) * k
    return VirtualSp4Class(out)


@lru_cache(maxsize=None)
def _weighted_character(l: int, m: int, t: int) -> Laurent:
    w = l + m + 2 * t
    return sp4_character(l, m).map_exponents(lambda e: (e[0], e[1], w), nvars=3)


def decompose_weighted_character(c: Laurent) -> "VirtualSp4Class":
    """Inverse of :meth:`VirtualSp4Class.weighted_character`.

    The third exponent is the Hodge weight; a summand ``W_{p,q}`` in weight
    ``w`` receives twist ``(w - p - q) / 2``.
    """
    if c.nvars != 3:
        raise ValueError("expected a weighted character in three variables")
    if not c.is_weyl_invariant():
        raise ValueError("character is not Weyl-group invariant")
    out: dict = {}
    rest = c
    for w in sorted({e[2] for e in c.support()}):
        while True:
            top = _dominant_top(rest, (w,))
            if top is None:
                break
            p, q = top
            if (w - p - q) % 2 or w < p + q:
                raise ValueError(f"weight {w} is incompatible with W_{{{p},{q}}}")
            t = (w - p - q) // 2
            k = rest.coeff((p, q, w))
            out[(p, q, t)] = k
            rest = rest - _weighted_character(p, q, t) * k
    return VirtualSp4Class(out)


class VirtualSp4Class:
    """Virtual combination of twisted irreducibles ``W_{l,m}(-t)``.

    Stored as a mapping ``(l, m, t) -> multiplicity``; multiplicities are ints,
    or Fractions in intermediate generating-function arithmetic.  Labels
    outside the cone ``l >= m >= 0`` are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int, int], Rational] | None = None):
        clean = {}
        for (l, m, t), c in (terms or {}).items():
            if c and l >= m >= 0:
                if t < 0:
                    raise ValueError(f"negative twist {t}")
                key = (l, m, t)
                clean[key] = _normalize(clean.get(key, 0) + c)
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def one(cls) -> "VirtualSp4Class":
        return cls({(0, 0, 0): 1})

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(tuple(key), 0)

    def __eq__(self, other):
        if not isinstance(other, VirtualSp4Class):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for (l, m, t), c in sorted(self._terms.items()):
            twist = f"(-{t})" if t else ""
            parts.append(f"{c}*W[{l},{m}]{twist}")
        return " + ".join(parts)

    def __add__(self, other):
        if not isinstance(other, VirtualSp4Class):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return VirtualSp4Class(out)

    def __neg__(self):
        return VirtualSp4Class({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, VirtualSp4Class):
            return sp4_tensor(self, other)
        if isinstance(other, Rational):
            return VirtualSp4Class({k: c * other for k, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def twist(self, s: int) -> "VirtualSp4Class":
        """Multiply by ``L^s``."""
        return VirtualSp4Class({(l, m, t + s): c for (l, m, t), c in self._terms.items()})

    def dim(self):
        return _normalize(sum(c * sp4_dim(l, m) for (l, m, _), c in self._terms.items()))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def untwisted(self) -> "VirtualSp4Class":
        """Forget Tate twists."""
        out: dict = {}
        for (l, m, _), c in self._terms.items():
            out[(l, m, 0)] = out.get((l, m, 0), 0) + c
        return VirtualSp4Class(out)

    def character(self) -> Laurent:
        """Sp(4) character, ignoring twists."""
        out = Laurent(nvars=2)
        for (l, m, _), c in self._terms.items():
            out = out + sp4_character(l, m) * c
        return out

    def weighted_character(self) -> Laurent:
        """Character in ``(x1, x2, z)`` with ``z`` tracking Hodge weight."""
        out: dict = {}
        for (l, m, t), c in self._terms.items():
            for e, k in _weighted_character(l, m, t).items():
                out[e] = out.get(e, 0) + k * c
        return Laurent(out, nvars=3)

    def to_json(self) -> list[dict]:
        return [
            {"l": l, "m": m, "twist": t, "coeff": c if isinstance(c, int) else str(c)}
            for (l, m, t), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "VirtualSp4Class":
        return cls({(d["l"], d["m"], d["twist"]): Fraction(d["coeff"]) for d in data})


def W(l: int, m: int = 0, t: int = 0, coeff: Rational = 1) -> VirtualSp4Class:
    """The class ``coeff * W_{l,m}(-t)``; zero outside the dominant cone."""
    return VirtualSp4Class({(l, m, t): coeff})


def sp4_tensor(u: VirtualSp4Class, v: VirtualSp4Class, hodge: bool = True) -> VirtualSp4Class:
    """Tensor product of virtual classes.

    With ``hodge=True`` each summand gets the twist that keeps the product
    pure, e.g. ``W (x) W = W_{2,0} + W_{1,1} + W_{0,0}(-1)``.  With
    ``hodge=False`` twists of the factors simply add.
    """
    if hodge:
        return decompose_weighted_character(u.weighted_character() * v.weighted_character())
    out = VirtualSp4Class()
    for (l1, m1, t1), c1 in u.items():
        for (l2, m2, t2), c2 in v.items():
            prod = decompose_character(sp4_character(l1, m1) * sp4_character(l2, m2))
            out = out + prod.twist(t1 + t2) * (c1 * c2)
    return out


def sp4_pieri(l: int, m: int) -> VirtualSp4Class:
    """``W_{l,m} (x) W_{1,0}`` by the Pieri rule; out-of-cone terms vanish."""
    _check_label(l, m)
    return W(l, m + 1) + W(l + 1, m) + W(l, m - 1) + W(l - 1, m)


def adams(d: int, v: VirtualSp4Class, hodge: bool = True) -> VirtualSp4Class:
    """Adams operation ``psi_d``: substitute ``x_i -> x_i**d`` in the character.

    Tate twists scale by ``d``; with ``hodge=True`` lower summands pick up the
    extra twist needed for homogeneity in weight.
    """
    if d < 1:
        raise ValueError(f"Adams operation needs d >= 1, got {d}")
    if d == 1:
        return v
    if hodge:
        return decompose_weighted_character(v.weighted_character().dilate(d))
    out = VirtualSp4Class()
    for (l, m, t), c in v.items():
        out = out + decompose_character(sp4_character(l, m).dilate(d)).twist(d * t) * c
    return out
