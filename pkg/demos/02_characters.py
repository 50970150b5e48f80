# # Multiplicative characters and coset indicators
#
# A character of F_q^* is stored by its multiplier m: chi(g^e) = w^(m e) with
# w = exp(2 pi i / (q - 1)), and chi(0) = 0 for every character.

# %%
from thin_irred import make_field
from thin_irred.polynomial import MonicPoly, taylor_shift
from thin_irred.subgroup_char import (character_sum, characters, char_eval, coset_indicator,
                                      exact_integer, square_cosets, subgroup_elements)

F7 = make_field(7)
print("subgroup of order 3:", subgroup_elements(F7, 3))
chars = characters(F7, 6)
print("orders of the characters of F_7^*:", [c.order for c in chars])

# %% [markdown]
# Sums are kept as exponent histograms and reduced modulo the cyclotomic
# polynomial, so orthogonality is checked with integers, not floats.

# %%
for chi in chars:
    s = character_sum(F7, chi)
    print(f"m={chi.multiplier}: histogram {s.histogram} -> exact {exact_integer(s.histogram, 6)}")

# %% [markdown]
# Averaging the characters of order dividing t picks out one coset of the
# subgroup of index t.  For each shift u, the indicator says whether every
# coefficient of f(X + u) is a nonzero square.

# %%
sq = square_cosets(F7, 2)
f = MonicPoly((2, 1))   # X^2 + X + 2
for u in range(7):
    g = taylor_shift(F7, f, u)
    print(f"u={u}: f(X+u) = {g}, indicator {coset_indicator(F7, f, u, sq)}")

# %%
chi2 = chars[3]
print("chi_2 values on F_7:", [None if v.zero else (1 if v.exponent == 0 else -1)
                              for v in (char_eval(F7, chi2, a) for a in range(7))])
