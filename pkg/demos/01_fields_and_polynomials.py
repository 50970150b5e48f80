# # Finite fields and polynomials
#
# Elements of F_q are plain ints in range(q).  For q = p^k the int is read in
# base p: digit i is the coefficient of x^i in F_p[x]/(m(x)).

# %%
from thin_irred import make_field
from thin_irred.polynomial import (MonicPoly, derivative, discriminant, evaluate,
                                   is_irreducible, resultant, taylor_shift)

F7 = make_field(7)
F9 = make_field(3, 2)
print("F_7 generator:", F7.generator)
print("F_9 modulus (low to high):", F9.modulus, " generator:", F9.format(F9.generator))

# %% [markdown]
# Arithmetic goes through the context.  Extension elements can be written as
# literals like "2+1*x".

# %%
x = F9.parse("x")
print("x * x =", F9.format(F9.mul(x, x)))
print("dlog_g(5) in F_7 =", F7.dlog(5), "; g^dlog =", F7.pow(F7.generator, F7.dlog(5)))

# %% [markdown]
# A monic polynomial stores only a_0 .. a_{n-1}; the leading 1 is implicit.

# %%
f = MonicPoly((1, 3))          # X^2 + 3X + 1
print("f =", f, " f(2) =", evaluate(F7, f, 2))
print("f'' =", derivative(F7, f, 2))
print("f(X + 2) =", taylor_shift(F7, f, 2))
print("disc f =", discriminant(F7, f), " Res(f, f') =", resultant(F7, f.full, derivative(F7, f, 1)))

# %% [markdown]
# Irreducibility uses Rabin's test.  Counting all monic irreducibles of
# degree n reproduces the necklace numbers.

# %%
from itertools import product
from thin_irred.polynomial import necklace_count

for q, n in [(5, 2), (7, 3), (9, 2)]:
    p, k = (3, 2) if q == 9 else (q, 1)
    F = make_field(p, k)
    cnt = sum(is_irreducible(F, list(low) + [1]) for low in product(range(q), repeat=n))
    print(f"q={q} n={n}: {cnt} irreducible, necklace formula {necklace_count(q, n)}")
