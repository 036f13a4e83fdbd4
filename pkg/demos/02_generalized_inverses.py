# %% [markdown]
# # Drazin, group, Moore-Penrose and core inverses
#
# Every inverse is built from a basis adapted to the operator and then
# checked against its defining equations.

# %%
from finpotent import FinitePotentOperator, check_inverse_class, core_inverse, drazin, group_inverse, moore_penrose
from finpotent import core_dagger, core_of_mp, is_ep

C = FinitePotentOperator.from_rows([[1, 1], [0, 0]])
print("C is EP:", is_ep(C))
print("group inverse:\n", group_inverse(C).block, sep="")
print("Moore-Penrose:\n", moore_penrose(C).block, sep="")
print("core inverse:\n", core_inverse(C).block, sep="")

# %% [markdown]
# The core inverse satisfies its three conditions and equals
# group o C o Moore-Penrose.  It is a {1,2}-inverse but not the
# Moore-Penrose inverse, since C is not EP.

# %%
print(dict(check_inverse_class(C, core_inverse(C), "core")))
print(dict(check_inverse_class(C, core_inverse(C), "penrose")))
assert core_inverse(C) == group_inverse(C) @ C @ moore_penrose(C)

# %%
print("core inverse of the core inverse:\n", core_dagger(C).block, sep="")
print("core inverse of the MP inverse:\n", core_of_mp(C).block, sep="")

# %% [markdown]
# Above index 1 only the Drazin inverse survives.

# %%
from finpotent import IndexTooLarge

A = FinitePotentOperator.from_rows([[29, 0, 0, 0, 0], [0, 33, 0, 0, 0], [0] * 5, [0] * 5, [0, 0, 0, 1, 0]])
print(drazin(A).block)
try:
    core_inverse(A)
except IndexTooLarge as exc:
    print("refused:", exc)
