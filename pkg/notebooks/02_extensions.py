# %% [markdown]
# # Building a cyclic extension
# Assign cDes inside each descent fiber, then stitch a rotation map p orbit by orbit.

# %%
from cyclic_descents import build_extension, parse_shape, validate_extension
from cyclic_descents.errors import NotExtendable

ext = build_extension(parse_shape("3,2,1"))
for T, c, j in zip(ext.tableaux[:4], ext.cdes, ext.p):
    print(T.rows(), "cDes =", list(c), "p ->", j + 1)
print("orbit sizes:", sorted(len(o) for o in ext.p_orbits()))
print(validate_extension(ext))

# %%
# connected ribbons have no extension
for text in ["5", "3,3/2", "1,1,1"]:
    try:
        build_extension(parse_shape(text))
    except NotExtendable as e:
        print(text, "->", e)

# %%
# on rectangles, promotion gives the same fibers
import numpy as np
from cyclic_descents import enumerate_syt, fiber_table_formula, promotion, straight_shape

shape = straight_shape([3, 3])
tabs = enumerate_syt(shape)
top = 1 << 5
cdes = [T.des_mask | (top if promotion(T).des_mask & 1 else 0) for T in tabs]
print(np.array_equal(np.bincount(cdes, minlength=64), fiber_table_formula(shape).m))
