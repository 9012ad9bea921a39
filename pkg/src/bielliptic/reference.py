"""Published values of the equivariant Euler classes of pointed bi-elliptic curves.

``KNOWN_EULER[n][lam]`` maps powers of ``L`` to coefficients in the
``s_lam``-isotypic part of ``e_c^{S_n}(B_n)``.
"""
from __future__ import annotations

from .motives import L, MotiveClass, cusp

__all__ = ["KNOWN_EULER", "KNOWN_NON_TATE", "known_euler"]

KNOWN_EULER: dict[int, dict[tuple, dict[int, int]]] = {
    0: {(): {2: 1, 1: -1}},
    1: {(1,): {3: 1, 1: -1}},
    2: {
        (2,): {4: 1, 2: -1, 1: 1},
        (1, 1): {3: 1, 2: -1, 1: -1, 0: 2},
    },
    3: {
        (3,): {5: 1, 3: -2, 2: 2, 1: 1, 0: -2},
        (2, 1): {4: 1, 3: -1, 1: 2},
        (1, 1, 1): {2: -1, 1: 1, 0: 2},
    },
    4: {
        (4,): {6: 1, 4: -2, 3: 1, 2: 1, 1: -3},
        (3, 1): {5: 1, 4: -2, 3: 1, 2: 3, 1: -1, 0: -2},
        (2, 2): {4: 1, 2: -1, 1: -1, 0: 3},
        (2, 1, 1): {3: -1, 1: 5, 0: 2},
        (1, 1, 1, 1): {3: -1, 2: -1, 1: 1, 0: 3},
    },
}

# s_{1^6} coefficient for n = 6, the first one that is not a polynomial in L
KNOWN_NON_TATE = cusp(2, 8) - L**4 + 3 * L + 5


def _from_powers(coeffs: dict[int, int]) -> MotiveClass:
    return sum((c * L**p for p, c in coeffs.items()), MotiveClass())


def known_euler(n: int) -> dict[tuple, MotiveClass]:
    return {lam: _from_powers(c) for lam, c in KNOWN_EULER[n].items()}
