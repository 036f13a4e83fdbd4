# %% [markdown]
# # The general core pre-order is not antisymmetric
#
# Comparing operators of any index through their core parts gives a
# reflexive and transitive relation.  Two different operators with the same
# core part are related both ways.

# %%
from finpotent import gamma, general_core_leq, hasse, verify_order_axioms
from finpotent.orders import shared_core_pair

A, B = shared_core_pair()
print("index(A) =", A.index, " index(B) =", B.index)
print(gamma(A).block)
assert gamma(A) == gamma(B)

# %%
print("A <= B:", general_core_leq(A, B).verdict)
print("B <= A:", general_core_leq(B, A).verdict)
print("A == B:", A == B)

# %%
print("\n".join(verify_order_axioms("general-core", [A, B]).lines()))
print(hasse([("A", A), ("B", B)], "general-core"))
