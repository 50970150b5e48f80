# # Counting irreducibles with constrained coefficients and fixed discriminant
#
# For each configuration (d, subgroup orders, coset reps) we count exactly and
# compare the deviation from the main term with the error bound, decided in
# rational arithmetic.

# %%
from collections import Counter

from thin_irred import make_field
from thin_irred.census import (CensusParams, count_irreducibles, theorem_bound_check,
                               theorem_grid)
from thin_irred.subgroup_char import coset_spec, square_cosets

F = make_field(11)
print("nonzero-coefficient quadratics over F_11:",
      count_irreducibles(CensusParams(F, 2)).exact_count)
sq = count_irreducibles(CensusParams(F, 2, cs=square_cosets(F, 2)))
print("square coefficients:", sq.exact_count, "main term", sq.main_term)

# %%
out = theorem_bound_check(CensusParams(F, 3, 3, coset_spec(F, [5, 10, 5], [1, 2, 1])))
print("count", out.details["count"], "main term", out.details["main_term"])
print("|deviation| =", out.observed, "<= bound", round(out.ceiling, 3), ":", out.holds)

# %% [markdown]
# A seeded grid of configurations.  The verdict never uses floating point.

# %%
tally = Counter()
for d, orders, reps in theorem_grid(F, 3, seed=1):
    tally[theorem_bound_check(CensusParams(F, 3, d, coset_spec(F, orders, reps))).holds] += 1
print("verdicts:", dict(tally))
