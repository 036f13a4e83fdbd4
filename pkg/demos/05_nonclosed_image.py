# %% [markdown]
# # A compact nilpotent operator with non-closed image
#
# e_n -> e_{n+1}/(n+1) for even n, zero on odd n.  The targets
# y_m = sum e_{2k+1}/(2k+1) converge, but their minimal-norm preimages
# e_2 + e_4 + ... + e_{2m} have norm sqrt(m).  Finite truncations show the
# growth exactly.

# %%
from finpotent import preimage_growth, truncated_weighted_shift

phi = truncated_weighted_shift(8)
print(phi.block)
assert (phi @ phi).is_zero()

# %%
report = preimage_growth(100)
for m in (1, 4, 25, 100):
    i = m - 1
    print(f"m={m:3d}  |y_m|={report.target_norms[i]:.5f}  |x_m|={report.preimage_norms[i]:.5f}  |x_m|^2={report.preimage_sq_norms[i]}")

# %%
print(report.to_csv().splitlines()[:4])
