# %% [markdown]
# # Branching Sp(4) representations to the wreath product
#
# A bi-elliptic surface splits its symplectic 4-space into two planes that may
# be swapped, so local systems `W_{l,m}` restrict to `Sp(2) wr S2`.  Induced
# pieces are `U_{a,b}`; pieces fixed by the swap are `U_a^+` and `U_a^-`.

# %%
from bielliptic.weylchars import W, sp4_dim, sp4_tensor
from bielliptic.wreath import (
    Diag,
    branch_sp4_to_wreath,
    branch_wreath_to_diagonal,
    diagonal_swap_trace,
    twisted_pullback,
    wreath_twisted_character,
    twisted_character_of_restriction,
)

for l, m in [(1, 0), (1, 1), (2, 1), (2, 2), (3, 1)]:
    print(f"W{l},{m} (dim {sp4_dim(l, m)}) -> {branch_sp4_to_wreath(l, m)}")

# %% [markdown]
# Tate twists keep every summand at the Hodge weight of the source.

# %%
print(twisted_pullback(2, 1))
print(twisted_pullback(2, 2))
print(sp4_tensor(W(1, 0), W(1, 0)))

# %% [markdown]
# The swap composed with a torus element has eigenvalues `x, 1/x, -x, -1/x`.
# Only the swap-stable pieces contribute to its trace, which gives an oracle.

# %%
w = branch_sp4_to_wreath(3, 1)
print(wreath_twisted_character(w) == twisted_character_of_restriction(3, 1))

# %% [markdown]
# Restricting further to the diagonal `Sp(2) x S2`:

# %%
u = Diag(3, "+")
print(branch_wreath_to_diagonal(u))
direct, branched = diagonal_swap_trace(u)
print(direct == branched)
