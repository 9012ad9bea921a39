# %% [markdown]
# # Euler classes of local systems on the bi-elliptic locus
#
# The locus of bi-elliptic curves is the surface locus `E2` minus the diagonal
# `Delta`.  Compactly supported Euler classes are additive, so
# `e_c(M) = e_c(E2) - e_c(Delta)`.

# %%
from bielliptic.cohomology import ec_A1, ec_Delta, ec_E2, ec_M, ec_trivial_independent, ec_Y2
from bielliptic.weylchars import W
from bielliptic.wreath import Diag, Pair

print("Y(2), V0:", ec_Y2(0).euler())
print("Y(2), V6:", ec_Y2(6).euler())
print("A1, V10:", ec_A1(10))

# %%
for u in [Diag(0, "+"), Diag(2, "+"), Diag(6, "+"), Pair(4, 2)]:
    print(f"{u}: E2 -> {ec_E2(u)},  Delta -> {ec_Delta(u)}")

# %% [markdown]
# The constant system through the full pipeline, and again by averaging
# characters over `S3 x S2`:

# %%
print(ec_M(W(0, 0)), "|", ec_trivial_independent())
for l, m in [(1, 1), (2, 0), (2, 2), (4, 2)]:
    print(f"W{l},{m}: {ec_M(W(l, m))}")
