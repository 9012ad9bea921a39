# %% [markdown]
# # Cusp forms at level two
#
# `Gamma(2)` is normal in `SL2(Z)` with quotient `S3`, and conjugate to
# `Gamma0(4)`.  The S3-isotypic decomposition of `S_k(Gamma(2))` is read off
# from newform dimensions at levels 1, 2 and 4.

# %%
from bielliptic.dimforms import dim_cusp, dim_new, equivariant_cusp_dims

print(" k  S(G1) S(G0(2)) S(G0(4))  new1 new2 new4   s3 s21 s111")
for k in range(2, 27, 2):
    m = equivariant_cusp_dims(k)
    print(f"{k:2d}  {dim_cusp('G1', k):5d} {dim_cusp('G0(2)', k):8d} {dim_cusp('G0(4)', k):8d}"
          f"  {dim_new(1, k):4d} {dim_new(2, k):4d} {dim_new(4, k):4d}"
          f"   {m.s3:2d} {m.s21:3d} {m.s111:4d}")

# %% [markdown]
# The weighted total `s3 + 2 s21 + s111` equals `dim S_k(Gamma0(4))`.

# %%
print(all(equivariant_cusp_dims(k).dim() == dim_cusp("G0(4)", k) for k in range(2, 41, 2)))
