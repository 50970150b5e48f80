# # Shift classes, bad classes and twisted character sums

# %%
from thin_irred import make_field
from thin_irred.census import (bad_class_bound_check, decomposition_check, family_members,
                               split_classes, weil_scan)
from thin_irred.polynomial import MonicPoly
from thin_irred.subgroup_char import square_cosets

F7 = make_field(7)
for c in split_classes(F7, 3, 2):
    print(c.representative, "size", c.size, "good" if c.good else f"bad {c.witnesses}",
          "members with nonzero coeffs:", c.in_family)

# %%
for n in (2, 3, 4):
    out = bad_class_bound_check(F7, n, 3)
    print(f"n={n}: B = {out.observed}, ceiling {out.ceiling}")

# %% [markdown]
# Twisted sums over good classes, against (n(n-1)/2) sqrt(q) and against
# the root-count bound (sum of degrees - 1) sqrt(q).  At q = 13, n = 2 the
# first ceiling is exceeded while the second holds.

# %%
for q in (7, 11, 13):
    F = make_field(q)
    worst = max((weil_scan(F, 2, d, square_cosets(F, 2)) for d in range(1, q)),
                key=lambda r: r.max_abs)
    print(f"q={q}: max |S| = {worst.max_abs:.4f}, ceiling {worst.ceiling:.4f}, "
          f"root-count violations {len(worst.degree_violations)}")

# %% [markdown]
# Counting shifts that land in the cosets via characters: the principal
# term needs a correction at shifts where some coefficient vanishes.

# %%
f = MonicPoly(family_members(F7, 2, 3)[0])
r = decomposition_check(F7, f, square_cosets(F7, 2))
print(f, "in cosets for", r.shifts_in_family, "shifts; boundary shifts", r.zero_shifts,
      "; exact identity", r.exact_holds, "; without boundary", r.literal_holds)
