"""A small Grothendieck ring of Hodge classes.

Elements are integer combinations of commuting monomials in the generators

* ``L``, the Tate class (rank 1, weight 2);
* ``S[N,k]``, the motive of weight-``k`` newforms at level ``N`` in 1, 2, 4
  (rank ``2 * dim_new(N, k)``, weight ``k - 1``);
* ``A[N,k]``, a formal exterior square of ``S[N,k]``, used only when the
  newform space has dimension above one.

``GradedClass`` keeps even and odd cohomological degree apart, so that
swap-invariants of a square obey the Koszul sign rule.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .dimforms import dim_new

__all__ = [
    "Gen",
    "GradedClass",
    "GradedEquivariantClass",
    "MotiveClass",
    "L",
    "ONE",
    "S3_IRREPS",
    "ZERO",
    "cusp",
    "graded_mul",
    "lambda2",
    "psi2",
    "super_invariants",
    "sym2",
]


class Gen(NamedTuple):
    kind: str  # "L", "S" or "A"
    level: int = 0
    weight: int = 0

    def __str__(self):
        if self.kind == "L":
            return "L"
        return f"{self.kind}[{self.level},{self.weight}]"

    def latex(self) -> str:
        if self.kind == "L":
            return r"\mathbf{L}"
        body = rf"\mathbf{{S}}_{{{self.weight}}}({self._group_tex()})"
        return body if self.kind == "S" else rf"\wedge^2 {body}"

    def _group_tex(self) -> str:
        return r"\Gamma" if self.level == 1 else rf"\Gamma_0({self.level})"

    def rank(self) -> int:
        if self.kind == "L":
            return 1
        n = 2 * dim_new(self.level, self.weight)
        return n if self.kind == "S" else n * (n - 1) // 2

    def hodge_weight(self) -> int:
        if self.kind == "L":
            return 2
        return (self.weight - 1) * (1 if self.kind == "S" else 2)


Monomial = tuple  # sorted tuple of (Gen, exponent)

_L = Gen("L")


def _mono_mul(x: Monomial, y: Monomial) -> Monomial:
    out = dict(x)
    for g, e in y:
        out[g] = out.get(g, 0) + e
    return tuple(sorted(out.items()))


def _mono_key(mono: Monomial):
    # cusp monomials first, then descending powers of L
    lpow = dict(mono).get(_L, 0)
    rest = tuple((g, e) for g, e in mono if g != _L)
    return (0 if rest else 1, rest, -lpow)


class MotiveClass:
    """Integer combination of monomials; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((g, e) for g, e in mono if e))
            clean[mono] = clean.get(mono, 0) + c
        for c in clean.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {c}")
        self._terms = {m: int(c) for m, c in clean.items() if c}

    @classmethod
    def const(cls, n: int) -> "MotiveClass":
        return cls({(): n})

    @classmethod
    def gen(cls, g: Gen, e: int = 1) -> "MotiveClass":
        return cls({((g, e),): 1})

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _mono_key(kv[0]))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MotiveClass.const(other)
        if not isinstance(other, MotiveClass):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _coerce(self, other):
        if isinstance(other, MotiveClass):
            return other
        if isinstance(other, int):
            return MotiveClass.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MotiveClass(out)

    __radd__ = __add__

    def __neg__(self):
        return MotiveClass({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MotiveClass(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def half(self) -> "MotiveClass":
        """Exact division by two; raises if some coefficient is odd."""
        odd = [c for c in self._terms.values() if c % 2]
        if odd:
            raise ArithmeticError(f"class is not divisible by 2: {self}")
        return MotiveClass({m: c // 2 for m, c in self._terms.items()})

    def rank(self) -> int:
        total = 0
        for mono, c in self._terms.items():
            r = c
            for g, e in mono:
                r *= g.rank() ** e
            total += r
        return total

    def generators(self) -> set[Gen]:
        return {g for mono in self._terms for g, _ in mono}

    def is_tate(self) -> bool:
        return self.generators() <= {_L}

    def is_effective(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def coefficient(self, mono: Iterable[tuple[Gen, int]]) -> int:
        return self._terms.get(tuple(sorted(mono)), 0)

    def l_polynomial(self) -> dict[int, int]:
        """Coefficients of a pure Tate class as ``{power of L: coeff}``."""
        if not self.is_tate():
            raise ValueError(f"{self} is not a polynomial in L")
        return {dict(m).get(_L, 0): c for m, c in self._terms.items()}

    def drop(self, kinds: Iterable[str] = (), tate: bool = False) -> "MotiveClass":
        """Remove monomials touching the given generator kinds."""
        kinds = set(kinds)
        keep = {}
        for m, c in self._terms.items():
            if any(g.kind in kinds for g, _ in m):
                continue
            if tate and all(g.kind == "L" for g, _ in m):
                continue
            keep[m] = c
        return MotiveClass(keep)

    # -- rendering ---------------------------------------------------------

    def _render(self, fmt_gen, fmt_pow, sep_plus, sep_minus, lead_minus, juxt) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.items()):
            body = juxt.join(fmt_pow(fmt_gen(g), e) for g, e in mono)
            mag = abs(c)
            text = body if (mag == 1 and body) else f"{mag}{body}"
            if i == 0:
                out.append(lead_minus + text if c < 0 else text)
            else:
                out.append((sep_minus if c < 0 else sep_plus) + text)
        return "".join(out)

    def __str__(self):
        return self._render(
            str,
            lambda s, e: s if e == 1 else f"{s}^{e}",
            " + ",
            " - ",
            "-",
            "*",
        )

    def __repr__(self):
        return f"MotiveClass({self})"

    def latex(self) -> str:
        return self._render(
            Gen.latex,
            lambda s, e: s if e == 1 else f"{s}^{{{e}}}" if e > 9 else f"{s}^{e}",
            "+",
            "-",
            "-",
            "",
        )

    def to_json(self) -> list[dict]:
        return [
            {
                "gens": [{"gen": str(g), "exp": e} for g, e in mono],
                "coeff": c,
            }
            for mono, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "MotiveClass":
        terms = {}
        for t in data:
            mono = tuple((_parse_gen(d["gen"]), d["exp"]) for d in t["gens"])
            terms[mono] = terms.get(mono, 0) + t["coeff"]
        return cls(terms)


_GEN_RE = re.compile(r"^([SA])\[(\d+),(\d+)\]$")


def _parse_gen(s: str) -> Gen:
    if s == "L":
        return _L
    m = _GEN_RE.match(s)
    if not m:
        raise ValueError(f"unknown generator {s!r}")
    return Gen(m.group(1), int(m.group(2)), int(m.group(3)))


ZERO = MotiveClass()
ONE = MotiveClass.const(1)
L = MotiveClass.gen(_L)


def cusp(N: int, k: int) -> MotiveClass:
    """The cusp symbol ``S[N,k]``; the zero class when there are no newforms."""
    if dim_new(N, k) == 0:
        return ZERO
    return MotiveClass.gen(Gen("S", N, k))


def _psi2_gen(g: Gen, formal: bool) -> MotiveClass:
    if g.kind == "L":
        return L * L
    if g.kind == "A":
        raise NotImplementedError(f"psi2 of the formal symbol {g} is not defined")
    s = MotiveClass.gen(g)
    if dim_new(g.level, g.weight) == 1:
        # rank-2 motive of weight k-1 has determinant L^(k-1)
        return s * s - 2 * L ** (g.weight - 1)
    if not formal:
        raise NotImplementedError(
            f"psi2({g}) needs the exterior square of a {g.rank()}-dimensional motive; "
            "use lambda2/sym2, which fall back to the formal symbol A[N,k]"
        )
    return s * s - 2 * MotiveClass.gen(Gen("A", g.level, g.weight))


def psi2(x: MotiveClass, formal: bool = False) -> MotiveClass:
    """Second Adams operation, a ring endomorphism with ``psi2(L) = L^2``."""
    out = ZERO
    for mono, c in x._terms.items():
        term = MotiveClass.const(c)
        for g, e in mono:
            term = term * _psi2_gen(g, formal) ** e
        out = out + term
    return out


def lambda2(x: MotiveClass) -> MotiveClass:
    """Exterior square ``(x^2 - psi2 x) / 2``."""
    return (x * x - psi2(x, formal=True)).half()


def sym2(x: MotiveClass) -> MotiveClass:
    """Symmetric square ``(x^2 + psi2 x) / 2``."""
    return (x * x + psi2(x, formal=True)).half()


@dataclass(frozen=True)
class GradedClass:
    """Cohomology split by parity of degree; the Euler class is even - odd."""

    even: MotiveClass = ZERO
    odd: MotiveClass = ZERO

    def euler(self) -> MotiveClass:
        return self.even - self.odd

    def __add__(self, other: "GradedClass") -> "GradedClass":
        return GradedClass(self.even + other.even, self.odd + other.odd)

    def __bool__(self):
        return bool(self.even) or bool(self.odd)

    def to_json(self) -> dict:
        return {"even": self.even.to_json(), "odd": self.odd.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "GradedClass":
        return cls(MotiveClass.from_json(data["even"]), MotiveClass.from_json(data["odd"]))


def graded_mul(g: GradedClass, h: GradedClass) -> GradedClass:
    """Kuenneth product of parity-graded classes."""
    return GradedClass(g.even * h.even + g.odd * h.odd, g.even * h.odd + g.odd * h.even)


def super_invariants(g: GradedClass, sign: str) -> GradedClass:
    """Invariants of ``g (x) g`` under the swap twisted by ``sign``.

    Transposing two odd classes costs a sign, so for ``'+'`` the invariants
    are ``Sym^2`` of the even part and ``Alt^2`` of the odd part; ``'-'``
    exchanges the two.
    """
    cross = g.even * g.odd
    if sign == "+":
        return GradedClass(sym2(g.even) + lambda2(g.odd), cross)
    if sign == "-":
        return GradedClass(lambda2(g.even) + sym2(g.odd), cross)
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


S3_IRREPS = ("s3", "s21", "s111")


@dataclass(frozen=True)
class GradedEquivariantClass:
    """Isotypic pieces of an S3-equivariant graded class.

    ``parts[rho]`` is the multiplicity space of the irreducible ``rho``.
    """

    s3: GradedClass = GradedClass()
    s21: GradedClass = GradedClass()
    s111: GradedClass = GradedClass()

    def __getitem__(self, rho: str) -> GradedClass:
        if rho not in S3_IRREPS:
            raise KeyError(rho)
        return getattr(self, rho)

    def items(self):
        return [(rho, self[rho]) for rho in S3_IRREPS]

    def euler(self) -> dict[str, MotiveClass]:
        return {rho: g.euler() for rho, g in self.items()}

    def to_json(self) -> dict:
        return {rho: g.to_json() for rho, g in self.items()}

    @classmethod
    def from_json(cls, data: dict) -> "GradedEquivariantClass":
        return cls(**{rho: GradedClass.from_json(data[rho]) for rho in S3_IRREPS})
