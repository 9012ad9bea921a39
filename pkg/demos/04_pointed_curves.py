# %% [markdown]
# # Pointed bi-elliptic curves
#
# Getzler's product formula expresses the S_n-equivariant Euler class of the
# configuration space of n points on the fibres through Adams operations on
# the fibre class `1 - W + L`.  Pushing forward gives `e_c(B_n)`.

# %%
import time

from bielliptic.cli import emit_table
from bielliptic.getzler import euler_Bn, exponent_c, schur_coefficient

print("c_1 =", exponent_c(1))
print("c_2 =", exponent_c(2))
print("s_2 coefficient:", schur_coefficient(None, (2,)))

# %%
print(emit_table(range(5)))

# %% [markdown]
# At six points a cusp form of weight 8 on `Gamma0(2)` appears for the first time.

# %%
start = time.perf_counter()
row = euler_Bn(6)
print(row[(1,) * 6], f"({time.perf_counter() - start:.2f}s)")
print([lam for lam, c in row.items() if not c.is_tate()])
