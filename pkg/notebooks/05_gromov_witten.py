# %% [markdown]
# # Affine ribbon pairings
# The pairings with non-hook Schur functions are nonnegative and equal fiber sizes.

# %%
from cyclic_descents import affine_ribbon_schur, gw_invariant, straight_shape, fiber_table_formula
from cyclic_descents.symfunc import affine_ribbon_matrix, partitions

f = affine_ribbon_schur(9, {2, 6})
print({nu: c for nu, c in f.items() if c})

# %%
print(gw_invariant(6, {1, 3, 5}, (3, 2, 1)))
print(fiber_table_formula(straight_shape([3, 2, 1]))[{1, 3, 5}])

# %%
for n in range(4, 9):
    A = affine_ribbon_matrix(n)
    cols = [i for i, nu in enumerate(partitions(n)) if not nu.is_hook()]
    print(n, int(A[1:, cols].min()), int(A[1:, cols].max()))
