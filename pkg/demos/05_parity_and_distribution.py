# # Discriminant parity and the distribution over d

# %%
from thin_irred import make_field
from thin_irred.census import conjecture_table, count_disc_zero, stickelberger_scan

for q, n in [(7, 2), (5, 3), (11, 3), (7, 4)]:
    r = stickelberger_scan(make_field(q), n)
    print(f"q={q} n={n}: {r.total} irreducibles, chi_2(disc) = {r.expected} always:",
          not r.violations)

# %%
for q, n in [(5, 3), (7, 3)]:
    print(f"#{{disc = 0}} for q={q}, n={n}:", count_disc_zero(make_field(q), n), "=", q ** (n - 1))

# %% [markdown]
# Counts per discriminant, as a ratio to (2/n) q^(n-1).  Discriminants of
# the wrong quadratic character never occur.

# %%
for row in conjecture_table(make_field(13), 3):
    print(f"d={row.d:2d} chi_2={row.parity:+d} count={row.count:4d} ratio={float(row.ratio):.3f}")
