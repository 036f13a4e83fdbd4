# %% [markdown]
# # The core partial order
#
# phi <= psi when phi phi^core = psi phi^core and phi^core phi = phi^core psi.
# Equivalently psi agrees with phi on Im(phi) and pushes Ker(phi) into
# Im(phi)^perp, which is exactly how `generate_above` builds examples.

# %%
from finpotent import FinitePotentOperator, core_leq, generate_above, hasse, verify_order_axioms
from finpotent.generators import make_rng, random_index_le1_mixed

rng = make_rng(7)
phi = random_index_le1_mixed(4, rng)
psi = generate_above(phi, rng)
print("\n".join(core_leq(phi, psi).lines()))

# %% [markdown]
# Reverse direction, usually false; all three characterisations still agree.

# %%
r = core_leq(psi, phi)
print(r.verdict, r.consistent())

# %% [markdown]
# Partial order axioms on a random sample plus a few chains.

# %%
sample = [random_index_le1_mixed(3, rng) for _ in range(10)]
chains = []
for a in sample[:5]:
    b = generate_above(a, rng)
    chains.append((a, b, generate_above(b, rng)))
print("\n".join(verify_order_axioms("core", sample, chains).lines()))

# %%
named = [
    ("zero", FinitePotentOperator.from_rows([[0, 0], [0, 0]])),
    ("P", FinitePotentOperator.from_rows([[1, 0], [0, 0]])),
    ("I", FinitePotentOperator.from_rows([[1, 0], [0, 1]])),
]
print(hasse(named, "core"))
