# %% [markdown]
# # Generating functions
# Univariate, multivariate and bivariate descent polynomials.

# %%
from cyclic_descents import parse_shape
from cyclic_descents.gens import (
    cdes_poly,
    check_lemma_2_5,
    check_prop_5_3,
    des_poly,
    sn_cdes_bivariate,
    sn_multivariate,
)

shape = parse_shape("3,2,1")
print("des: ", des_poly(shape))
print("cdes:", cdes_poly(shape))
print(check_lemma_2_5(shape))

# %%
des, cdes = sn_multivariate(3)
print(des)
print(cdes)

# %%
for n in range(1, 6):
    print(n, sn_cdes_bivariate(n))
print(all(check_prop_5_3(n) for n in range(2, 8)))
