# %% [markdown]
# # Exceptional extensions
# Dropping the non-Escher axiom allows a few more families.

# %%
from itertools import permutations

from cyclic_descents import parse_shape, all_skew_shapes
from cyclic_descents.exceptional import (
    cdes_star_sn,
    check_prop_6_4,
    check_words_identity,
    exceptional_family,
    exceptional_feasibility,
    words_distribution,
)

print(words_distribution(2, 3))
print(check_words_identity(3, 5))

# %%
for w in permutations(range(1, 5)):
    s = cdes_star_sn(w)
    if len(s) in (0, 4) or w in [(1, 4, 3, 2), (4, 1, 2, 3)]:
        print(w, list(s))
print([check_prop_6_4(n) for n in (2, 4, 6)])

# %%
for n in range(1, 5):
    for s in all_skew_shapes(n):
        f = exceptional_feasibility(s)
        if f:
            print(s, exceptional_family(s), f)
