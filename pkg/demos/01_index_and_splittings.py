# %% [markdown]
# # Index, invariant splitting, core part
#
# A finite potent operator splits the space into a part where it is
# invertible (W) and a part where it is nilpotent (U).  The index is the
# nilpotency order on U, and also the first power at which ranks stop
# dropping.

# %%
from finpotent import FinitePotentOperator, ast_decomposition, cn_decomposition, rank_profile

A = FinitePotentOperator.from_rows([
    [29, 0, 0, 0, 0],
    [0, 33, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0],
])
print("index:", A.index)
print("ranks of A^0..A^3:", rank_profile(A, 3))

# %%
ast = ast_decomposition(A)
print("W =", ast.W)
print("U =", ast.U_block)

# %% [markdown]
# The core part acts as A on W and kills U; the rest is nilpotent and the
# two pieces annihilate each other.

# %%
phi1, phi2 = cn_decomposition(A)
print(phi1.block)
print()
print(phi2.block)
assert phi1 + phi2 == A
assert (phi1 @ phi2).is_zero() and (phi2 @ phi1).is_zero()
assert (phi2 ** A.index).is_zero()

# %% [markdown]
# On a countably infinite space the operator is given by its action on
# e_1..e_m and sends the rest to zero.  An invertible block still has index
# 1 there, because the tail lies in the kernel.

# %%
from finpotent import COUNTABLE

shift_free = FinitePotentOperator.from_rows([[2, 0], [0, 3]], COUNTABLE)
print("finite-dim index would be 0, countable index is", shift_free.index)
