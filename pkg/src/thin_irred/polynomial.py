"""Univariate polynomials over F_q.

A general polynomial is a list of field elements, lowest degree first,
with no trailing zeros (the zero polynomial is ``[]``).  A monic
polynomial of degree n is a :class:`MonicPoly` holding only the lower
coefficients (a_0, ..., a_{n-1}).  Functions that take a polynomial accept
either form.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import CharacteristicTooSmall, ZeroArgument, ZeroDerivative
from .finite_field import FieldCtx, format_poly, prime_factors


@dataclass(frozen=True, order=True)
class MonicPoly:
    """X^n + a_{n-1} X^{n-1} + ... + a_0, stored as (a_0, ..., a_{n-1})."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a monic polynomial needs degree >= 1")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def full(self) -> list[int]:
        return list(self.coeffs) + [1]

    def __str__(self) -> str:
        return format_poly(self.full)


Poly = Union[MonicPoly, Sequence[int]]


def trim(c: Sequence[int]) -> list[int]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def coeffs_of(f: Poly) -> list[int]:
    """Full coefficient list (low to high, trimmed) of either representation."""
    if isinstance(f, MonicPoly):
        return f.full
    return trim(f)


def degree(f: Poly) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(coeffs_of(f)) - 1


def as_monic(ctx: FieldCtx, f: Poly) -> MonicPoly:
    if isinstance(f, MonicPoly):
        return f
    c = trim(f)
    if len(c) < 2 or c[-1] != 1:
        raise ValueError(f"not a monic polynomial of degree >= 1: {c}")
    return MonicPoly(tuple(c[:-1]))


def evaluate(ctx: FieldCtx, f: Poly, x: int) -> int:
    """f(x) by Horner's rule."""
    add, mul = ctx.add, ctx.mul
    acc = 0
    for c in reversed(coeffs_of(f)):
        acc = add(mul(acc, x), c)
    return acc


def derivative(ctx: FieldCtx, f: Poly, i: int = 1) -> list[int]:
    """The i-th formal derivative f^(i); i larger than deg f gives []."""
    if i < 0:
        raise ValueError("derivative order must be >= 0")
    c = coeffs_of(f)
    if i == 0:
        return c
    out = []
    for k in range(i, len(c)):
        ff = 1
        for m in range(k - i + 1, k + 1):
            ff *= m
        out.append(ctx.mul(c[k], ctx.scalar(ff)))
    return trim(out)


def taylor_shift(ctx: FieldCtx, f: Poly, u: int) -> MonicPoly:
    """f(X + u), by repeated synthetic division."""
    m = as_monic(ctx, f)
    if ctx.p <= m.n:
        raise CharacteristicTooSmall(f"taylor shift needs p > n (p = {ctx.p}, n = {m.n})")
    c = m.full
    n = m.n
    add, mul = ctx.add, ctx.mul
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] = add(c[j], mul(u, c[j + 1]))
    return MonicPoly(tuple(c[:-1]))


# -- ring operations ---------------------------------------------------------

def poly_add(ctx: FieldCtx, a: Poly, b: Poly) -> list[int]:
    a, b = coeffs_of(a), coeffs_of(b)
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = ctx.add(out[i], c)
    return trim(out)


def poly_sub(ctx: FieldCtx, a: Poly, b: Poly) -> list[int]:
    return poly_add(ctx, a, [ctx.neg(c) for c in coeffs_of(b)])


def poly_mul(ctx: FieldCtx, a: Poly, b: Poly) -> list[int]:
    a, b = coeffs_of(a), coeffs_of(b)
    if not a or not b:
        return []
    add, mul = ctx.add, ctx.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = add(out[i + j], mul(x, y))
    return trim(out)


def poly_divmod(ctx: FieldCtx, a: Poly, b: Poly) -> tuple[list[int], list[int]]:
    a, b = coeffs_of(a), coeffs_of(b)
    if not b:
        raise ZeroArgument("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv_lc = ctx.inv(b[-1])
    sub, mul = ctx.sub, ctx.mul
    quot = [0] * (len(r) - db)
    for top in range(len(r) - 1, db - 1, -1):
        c = r[top]
        if c:
            c = mul(c, inv_lc)
            quot[top - db] = c
            base = top - db
            for i in range(db):
                r[base + i] = sub(r[base + i], mul(c, b[i]))
            r[top] = 0
    return trim(quot), trim(r[:db])


def poly_mod(ctx: FieldCtx, a: Poly, b: Poly) -> list[int]:
    return poly_divmod(ctx, a, b)[1]


def poly_gcd(ctx: FieldCtx, a: Poly, b: Poly) -> list[int]:
    """Monic gcd ([] when both inputs are zero)."""
    a, b = coeffs_of(a), coeffs_of(b)
    while b:
        a, b = b, poly_mod(ctx, a, b)
    if not a:
        return a
    inv_lc = ctx.inv(a[-1])
    return [ctx.mul(c, inv_lc) for c in a]


def poly_powmod(ctx: FieldCtx, base: Poly, e: int, mod: Poly) -> list[int]:
    result = [1]
    base = poly_mod(ctx, base, mod)
    while e:
        if e & 1:
            result = poly_mod(ctx, poly_mul(ctx, result, base), mod)
        e >>= 1
        if e:
            base = poly_mod(ctx, poly_mul(ctx, base, base), mod)
    return poly_mod(ctx, result, mod)


# -- resultants and discriminants -------------------------------------------

def resultant(ctx: FieldCtx, f: Poly, g: Poly) -> int:
    """Res(f, g) = lc(f)^deg(g) * prod of g(alpha) over the roots alpha of f.

    Euclidean scheme: Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r)
    with r = a mod b.
    """
    a, b = coeffs_of(f), coeffs_of(g)
    if not a or not b:
        raise ZeroArgument("resultant with the zero polynomial")
    mul, pw = ctx.mul, ctx.pow
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return mul(res, pw(b[0], da))
        if da == 0:
            return mul(res, pw(a[0], db))
        r = poly_mod(ctx, a, b)
        if not r:
            return 0
        if da & db & 1:
            res = ctx.neg(res)
        res = mul(res, pw(b[-1], da - len(r) + 1))
        a, b = b, r


def discriminant(ctx: FieldCtx, f: Poly) -> int:
    """disc f = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n."""
    m = as_monic(ctx, f)
    n = m.n
    if n == 1:
        return 1
    full = m.full
    df = derivative(ctx, full, 1)
    if not df:
        raise ZeroDerivative(f"derivative vanishes identically (p = {ctx.p} divides n = {n})")
    r = resultant(ctx, full, df)
    return ctx.neg(r) if (n * (n - 1) // 2) % 2 else r


# -- irreducibility ----------------------------------------------------------

def is_irreducible(ctx: FieldCtx, f: Poly) -> bool:
    """Rabin's test.

    f of degree n is irreducible iff X^(q^n) = X mod f and
    gcd(X^(q^(n/l)) - X, f) = 1 for every prime l dividing n.
    """
    m = as_monic(ctx, f)
    n = m.n
    if n == 1:
        return True
    full = m.full
    if full[0] == 0:
        return False
    q = ctx.q
    frob = [None] * (n + 1)
    h = [0, 1]
    for i in range(1, n + 1):
        h = poly_powmod(ctx, h, q, full)
        frob[i] = h
    if frob[n] != [0, 1]:
        return False
    for ell in prime_factors(n):
        diff = poly_sub(ctx, frob[n // ell], [0, 1])
        if len(poly_gcd(ctx, diff, full)) != 1:
            return False
    return True


def necklace_count(q: int, n: int) -> int:
    """Number of monic irreducibles of degree n over F_q: (1/n) sum mu(m) q^(n/m)."""
    total = 0
    for m in range(1, n + 1):
        if n % m == 0:
            total += _mobius(m) * q ** (n // m)
    return total // n


def _mobius(m: int) -> int:
    ps = prime_factors(m)
    r = m
    for ell in ps:
        r //= ell
        if r % ell == 0:
            return 0
    return -1 if len(ps) % 2 else 1
