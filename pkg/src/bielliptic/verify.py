"""Self-checks that compare every closed-form rule with an independent route.

Each suite returns a list of :class:`Check` records; a failing record carries
enough detail to reproduce the disagreement.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .cohomology import ec_Delta, ec_E2, ec_M, ec_trivial_independent
from .dimforms import dim_cusp, equivariant_cusp_dims
from .getzler import euler_Bn, partitions, schur_coefficient
from .reference import KNOWN_EULER, KNOWN_NON_TATE, known_euler
from .motives import L
from .torsion_sl2 import verify_dual_property
from .weylchars import (
    W,
    VirtualSp4Class,
    decompose_character,
    sp2_tensor,
    sp4_character,
    sp4_dim,
    sp4_pieri,
    sp4_tensor,
)
from .wreath import (
    Diag,
    Pair,
    WreathClass,
    branch_sp4_to_wreath,
    branch_wreath_to_diagonal,
    diagonal_swap_trace,
    tensor_defining,
    torus_character_of_restriction,
    twisted_character_of_restriction,
    wreath_dim,
    wreath_torus_character,
    wreath_twisted_character,
)

__all__ = ["Check", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    passed: bool
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failures": self.failures[:20]}


def _check(name: str, cases, predicate: Callable) -> Check:
    failures = [repr(c) for c in cases if not predicate(c)]
    return Check(name, not failures, failures)


def _labels(max_weight: int, bound: str = "sum"):
    for l in range(max_weight + 1):
        for m in range(l + 1):
            if bound == "sum" and l + m > max_weight:
                continue
            yield l, m


def weylchars_suite(max_weight: int = 10, **_) -> list[Check]:
    labels = list(_labels(max_weight, "l"))
    return [
        _check(
            "character round trip",
            labels,
            lambda lm: decompose_character(sp4_character(*lm)) == W(*lm),
        ),
        _check(
            "Weyl dimension formula",
            labels,
            lambda lm: sp4_character(*lm).evaluate((1, 1)) == sp4_dim(*lm),
        ),
        _check(
            "Pieri rule vs character product",
            labels,
            lambda lm: sp4_pieri(*lm) == sp4_tensor(W(*lm), W(1, 0), hodge=False),
        ),
        _check(
            "Clebsch-Gordan dimension",
            [(a, b) for a in range(2 * max_weight + 1) for b in range(2 * max_weight + 1)],
            lambda ab: sum(c + 1 for c in sp2_tensor(*ab)) == (ab[0] + 1) * (ab[1] + 1),
        ),
    ]


def wreath_suite(max_weight: int = 10, **_) -> list[Check]:
    labels = list(_labels(max_weight))
    diag_labels = [Diag(a, s) for a in range(max_weight + 1) for s in "+-"]
    diag_labels += [Pair(a, b) for a in range(max_weight + 1) for b in range(a)]
    return [
        _check(
            "branching dimension",
            list(_labels(max_weight + 4, "l")),
            lambda lm: branch_sp4_to_wreath(*lm).dim() == sp4_dim(*lm),
        ),
        _check(
            "torus character",
            labels,
            lambda lm: wreath_torus_character(branch_sp4_to_wreath(*lm))
            == torus_character_of_restriction(*lm),
        ),
        _check(
            "swap-twisted character",
            labels,
            lambda lm: wreath_twisted_character(branch_sp4_to_wreath(*lm))
            == twisted_character_of_restriction(*lm),
        ),
        _check(
            "Pieri compatibility",
            list(_labels(max_weight, "l")),
            lambda lm: _branch_class(sp4_pieri(*lm)) == tensor_defining(branch_sp4_to_wreath(*lm)),
        ),
        _check(
            "diagonal dimension",
            diag_labels,
            lambda u: sum(c + 1 for c, _ in branch_wreath_to_diagonal(u)) == wreath_dim(u),
        ),
        _check(
            "diagonal swap trace",
            diag_labels,
            lambda u: diagonal_swap_trace(u)[0] == diagonal_swap_trace(u)[1],
        ),
    ]


def _branch_class(v: VirtualSp4Class) -> WreathClass:
    out = WreathClass()
    for (l, m, _), c in v.items():
        out = out + branch_sp4_to_wreath(l, m) * c
    return out


def sl2_suite(max_d: int = 12, d: int | None = None, **_) -> list[Check]:
    moduli = [d] if d else list(range(2, max_d + 1))
    reports = {n: verify_dual_property(n) for n in moduli}
    return [
        _check("eps-conjugator exists", moduli, lambda n: not reports[n].missing_conjugator),
        _check("inverse and eps-conjugate share a class", moduli, lambda n: not reports[n].class_mismatch),
    ]


def dims_suite(max_weight: int = 40, **_) -> list[Check]:
    weights = list(range(2, max(max_weight, 40) + 1, 2))
    return [
        _check(
            "Gamma(2) vs Gamma0(4) total dimension",
            weights,
            lambda k: equivariant_cusp_dims(k).dim() == dim_cusp("G0(4)", k),
        ),
    ]


def cohomology_suite(**_) -> list[Check]:
    return [
        _check("e_c(E_2) of the constant system", [None], lambda _: ec_E2(Diag(0, "+")) == L * L),
        _check("e_c(Delta) of the constant system", [None], lambda _: ec_Delta(Diag(0, "+")) == L),
        _check(
            "e_c(M) two ways",
            [None],
            lambda _: ec_M(W(0, 0)) == ec_trivial_independent() == L * L - L,
        ),
    ]


def getzler_suite(max_n: int = 7, **_) -> list[Check]:
    lams = [lam for n in range(max_n + 1) for lam in partitions(n)]

    def integral(lam):
        try:
            return schur_coefficient(None, lam).is_integral()
        except ArithmeticError:
            return False

    return [_check("integral Schur coefficients", lams, integral)]


def known_values_suite(**_) -> list[Check]:
    return [
        _check(
            "published Euler classes, n <= 4",
            sorted(KNOWN_EULER),
            lambda n: euler_Bn(n) == known_euler(n),
        ),
        _check(
            "first non-Tate coefficient",
            [None],
            lambda _: euler_Bn(6)[(1,) * 6] == KNOWN_NON_TATE,
        ),
    ]


SUITES: dict[str, Callable[..., list[Check]]] = {
    "weylchars": weylchars_suite,
    "wreath": wreath_suite,
    "sl2": sl2_suite,
    "dims": dims_suite,
    "cohomology": cohomology_suite,
    "getzler": getzler_suite,
    "known": known_values_suite,
}


def run_suite(name: str, **bounds) -> list[Check]:
    if name == "all":
        out = []
        for suite in SUITES.values():
            out += suite(**bounds)
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](**bounds)

