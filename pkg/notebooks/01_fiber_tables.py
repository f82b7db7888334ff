# %% [markdown]
# # Fiber tables
# For a skew shape that is not a connected ribbon, the number of tableaux with
# each cyclic descent set is forced by the ordinary descent fibers.  Two
# independent routes compute it.

# %%
from cyclic_descents import fiber_table_formula, fiber_table_inner, parse_shape, des_fibers

shape = parse_shape("3,2,1")
print(des_fibers(shape))

# %%
table = fiber_table_formula(shape)
print(table.to_text())
print("total:", table.total())

# %%
# the inner-product route pairs the Schur expansion with affine ribbon Schur functions
assert table == fiber_table_inner(shape)

# %%
# a skew shape with two components
print(fiber_table_formula(parse_shape("(1^2)+(3)")).to_text())
