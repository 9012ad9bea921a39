# %% [markdown]
# # Contragredients of SL2(Z/d)-representations
#
# Every `A` in `SL2(Z/d)` is inverted by conjugation with some `eps` of
# determinant `-1`.  With `eps` of determinant `+1` this can fail.

# %%
from bielliptic.torsion_sl2 import Mat2Mod, find_conjugator, find_eps_conjugator, verify_dual_property

A = Mat2Mod(1, 1, 0, 1, 7)
print("det -1:", find_eps_conjugator(A))
print("det +1:", find_conjugator(A, det=1))

# %%
for d in range(2, 13):
    r = verify_dual_property(d)
    print(f"d={d:2d} order={r.order:5d} classes={r.classes:3d} passed={r.passed}")
