"""Exact computations for local systems on the bi-elliptic loci in genus two.

Symplectic branching, modular-form dimension bookkeeping, compactly supported
Euler classes at level two, and Getzler's configuration-space generating
function, combined into the S_n-equivariant Euler characteristics of
n-pointed bi-elliptic genus-2 curves.

>>> from bielliptic import euler_Bn
>>> euler_Bn(1)
{(1,): MotiveClass(L^3 - L)}
"""
__version__ = "0.1.0"

from .cohomology import ec_A1, ec_Delta, ec_E2, ec_M, ec_Y2
from .getzler import euler_Bn, expand_generating_function, schur_coefficient
from .motives import L, MotiveClass, cusp
from .weylchars import VirtualSp4Class, W, adams, sp4_character, sp4_tensor
from .wreath import Diag, Pair, branch_sp4_to_wreath, twisted_pullback

__all__ = [
    "Diag",
    "L",
    "MotiveClass",
    "Pair",
    "VirtualSp4Class",
    "W",
    "adams",
    "branch_sp4_to_wreath",
    "cusp",
    "ec_A1",
    "ec_Delta",
    "ec_E2",
    "ec_M",
    "ec_Y2",
    "euler_Bn",
    "expand_generating_function",
    "schur_coefficient",
    "sp4_character",
    "sp4_tensor",
    "twisted_pullback",
]
