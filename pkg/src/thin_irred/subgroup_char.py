"""Subgroups of F_q^*, coset constraints and multiplicative characters.

Every character of the cyclic group F_q^* = <g> has the form
chi(g^e) = omega^(m e) for a fixed primitive (q-1)-th root of unity omega,
so a character is just its multiplier m and a character value is an
exponent modulo q - 1 (or zero).  Character sums are accumulated as
integer histograms over those exponents; :func:`reduce_cyclotomic` turns a
histogram into its canonical coordinates in Z[omega] so that identities
can be checked with integer equality.  Complex numbers only appear when a
magnitude is needed.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from .errors import CharacteristicTooSmall, NotADivisor, PrincipalCharacter
from .finite_field import FieldCtx
from .polynomial import MonicPoly, as_monic, derivative, evaluate


@dataclass(frozen=True)
class SubgroupSpec:
    """The subgroup of F_q^* of order ``size``; ``index`` = (q - 1) / size."""

    size: int
    index: int


@dataclass(frozen=True)
class CosetSpec:
    """Per-coefficient constraints a_i in reps[i] * groups[i]."""

    reps: tuple[int, ...]
    groups: tuple[SubgroupSpec, ...]

    def __post_init__(self):
        if len(self.reps) != len(self.groups):
            raise ValueError("reps and groups must have the same length")
        if any(h == 0 for h in self.reps):
            raise ValueError("coset representatives must be nonzero")

    @property
    def n(self) -> int:
        return len(self.reps)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(g.size for g in self.groups)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(g.index for g in self.groups)


@dataclass(frozen=True)
class MultChar:
    """chi(g^e) = omega^(multiplier * e) on F_q^*, and chi(0) = 0."""

    multiplier: int
    order: int
    group_order: int

    @property
    def principal(self) -> bool:
        return self.multiplier == 0

    def __mul__(self, other: "MultChar") -> "MultChar":
        n = self.group_order
        m = (self.multiplier + other.multiplier) % n
        return MultChar(m, n // math.gcd(m, n), n)


@dataclass(frozen=True)
class UnityValue:
    """Either 0 or omega^exponent, omega = exp(2 pi i / modulus)."""

    zero: bool
    exponent: int
    modulus: int

    def __mul__(self, other: "UnityValue") -> "UnityValue":
        if self.zero or other.zero:
            return UnityValue(True, 0, self.modulus)
        return UnityValue(False, (self.exponent + other.exponent) % self.modulus, self.modulus)

    def to_complex(self) -> complex:
        if self.zero:
            return 0j
        return cmath.exp(2j * math.pi * self.exponent / self.modulus)


def subgroup(ctx: FieldCtx, s: int) -> SubgroupSpec:
    n = ctx.q - 1
    if s < 1 or n % s:
        raise NotADivisor(f"subgroup order {s} does not divide q - 1 = {n}")
    return SubgroupSpec(s, n // s)


def coset_spec(ctx: FieldCtx, orders: Sequence[int], reps: Sequence[int] | None = None) -> CosetSpec:
    if reps is None:
        reps = [1] * len(orders)
    if len(reps) != len(orders):
        raise ValueError(f"{len(orders)} subgroup orders but {len(reps)} coset representatives")
    return CosetSpec(tuple(reps), tuple(subgroup(ctx, s) for s in orders))


def trivial_cosets(ctx: FieldCtx, n: int) -> CosetSpec:
    """All G_i = F_q^*, h = 1: the only constraint left is a_i != 0."""
    return coset_spec(ctx, [ctx.q - 1] * n)


def square_cosets(ctx: FieldCtx, n: int) -> CosetSpec:
    return coset_spec(ctx, [(ctx.q - 1) // 2] * n)


def subgroup_elements(ctx: FieldCtx, s: int) -> list[int]:
    """{g^(t j) : 0 <= j < s}, t = (q - 1) / s, in exponent order."""
    t = subgroup(ctx, s).index
    return [ctx.exp(t * j) for j in range(s)]


def coset_elements(ctx: FieldCtx, h: int, grp: SubgroupSpec) -> list[int]:
    """h G sorted by discrete log."""
    return sorted((ctx.mul(h, x) for x in subgroup_elements(ctx, grp.size)), key=ctx.dlog)


def coset_transversal(ctx: FieldCtx, grp: SubgroupSpec) -> list[int]:
    """Representatives g^0, ..., g^(t-1) of the cosets of grp."""
    return [ctx.exp(r) for r in range(grp.index)]


def coset_member(ctx: FieldCtx, x: int, h: int, grp: SubgroupSpec) -> bool:
    if x == 0:
        return False
    return ctx.pow(ctx.div(x, h), grp.size) == 1


def characters(ctx: FieldCtx, t: int) -> list[MultChar]:
    """The t characters of order dividing t, principal first."""
    n = ctx.q - 1
    if t < 1 or n % t:
        raise NotADivisor(f"{t} does not divide q - 1 = {n}")
    step = n // t
    return [MultChar(j * step, n // math.gcd(j * step, n), n) for j in range(t)]


def quadratic_character(ctx: FieldCtx) -> MultChar:
    n = ctx.q - 1
    return MultChar(n // 2, 2, n)


def char_eval(ctx: FieldCtx, chi: MultChar, x: int) -> UnityValue:
    n = ctx.q - 1
    if x == 0:
        return UnityValue(True, 0, n)
    return UnityValue(False, chi.multiplier * ctx.dlog(x) % n, n)


# -- exact values in Z[omega] ------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(a: list[int], b: Sequence[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for top in range(len(a) - 1, db - 1, -1):
        c = a[top]
        quot[top - db] = c
        if c:
            for i in range(db + 1):
                a[top - db + i] -= c * b[i]
    assert not any(a), "cyclotomic division left a remainder"
    return quot


def reduce_cyclotomic(hist: Sequence[int], m: int) -> tuple[int, ...]:
    """Canonical coordinates of sum hist[e] omega^e in the basis 1, omega, ..., omega^(phi(m)-1)."""
    phi = cyclotomic_poly(m)
    deg = len(phi) - 1
    c = list(hist) + [0] * max(0, deg - len(hist))
    for top in range(len(c) - 1, deg - 1, -1):
        v = c[top]
        if v:
            for i in range(deg + 1):
                c[top - deg + i] -= v * phi[i]
    return tuple(c[:deg])


def exact_integer(hist: Sequence[int], m: int) -> int | None:
    """The sum as an integer, or None when it is not rational."""
    coords = reduce_cyclotomic(hist, m)
    if any(coords[1:]):
        return None
    return coords[0]


def embed(hist: Sequence[int], m: int) -> complex:
    return sum(c * cmath.exp(2j * math.pi * e / m) for e, c in enumerate(hist) if c)


@dataclass(frozen=True)
class CharSum:
    """A character sum held as an exponent histogram (index e counts omega^e)."""

    histogram: tuple[int, ...]
    zeros: int

    @property
    def modulus(self) -> int:
        return len(self.histogram)

    @property
    def value(self) -> complex:
        return embed(self.histogram, self.modulus)

    @property
    def exact(self) -> tuple[int, ...]:
        return reduce_cyclotomic(self.histogram, self.modulus)


def character_sum(ctx: FieldCtx, chi: MultChar, xs: Sequence[int] | None = None) -> CharSum:
    """sum of chi(x) over xs (default F_q^*)."""
    n = ctx.q - 1
    hist = [0] * n
    zeros = 0
    for x in (range(1, ctx.q) if xs is None else xs):
        v = char_eval(ctx, chi, x)
        if v.zero:
            zeros += 1
        else:
            hist[v.exponent] += 1
    return CharSum(tuple(hist), zeros)


# -- the coset indicator and the twisted sums --------------------------------

def _inv_factorials(ctx: FieldCtx, n: int) -> list[int]:
    out, f = [], 1
    for i in range(n):
        if i:
            f *= i
        out.append(ctx.inv(ctx.scalar(f)))
    return out


def shifted_arguments(ctx: FieldCtx, f: MonicPoly, cs: CosetSpec, u: int) -> list[int]:
    """h_i^{-1} f^(i)(u) / i! for i = 0..n-1."""
    m = as_monic(ctx, f)
    if ctx.p <= m.n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {m.n})")
    if cs.n != m.n:
        raise ValueError(f"constraint length {cs.n} does not match degree {m.n}")
    inv_fact = _inv_factorials(ctx, m.n)
    full = m.full
    out = []
    for i in range(m.n):
        x = evaluate(ctx, derivative(ctx, full, i), u)
        out.append(ctx.mul(ctx.mul(x, inv_fact[i]), ctx.inv(cs.reps[i])))
    return out


def coset_indicator(ctx: FieldCtx, f: MonicPoly, u: int, cs: CosetSpec) -> int:
    """prod_i (1/t_i) sum_{psi in X_{t_i}} psi(h_i^{-1} f^(i)(u)/i!), evaluated exactly.

    Each inner sum is reduced in Z[omega]; it is t_i or 0.
    """
    n = ctx.q - 1
    total, denom = 1, 1
    for x, grp in zip(shifted_arguments(ctx, f, cs, u), cs.groups):
        hist = [0] * n
        for psi in characters(ctx, grp.index):
            v = char_eval(ctx, psi, x)
            if not v.zero:
                hist[v.exponent] += 1
        inner = exact_integer(hist, n)
        assert inner is not None
        total *= inner
        denom *= grp.index
    assert total % denom == 0
    return total // denom


def twisted_char_sum(ctx: FieldCtx, f: MonicPoly, K: Sequence[int],
                     chars: Mapping[int, MultChar], cs: CosetSpec,
                     points: Sequence[int] | None = None) -> CharSum:
    """sum over u of prod_{i in K} psi_i(h_i^{-1} f^(i)(u) / i!).

    ``points`` restricts u (default all of F_q).
    """
    K = sorted(set(K))
    if not K:
        raise ValueError("K must be nonempty")
    for i in K:
        if chars[i].principal:
            raise PrincipalCharacter(f"character attached to index {i} is principal")
    n = ctx.q - 1
    hist = [0] * n
    zeros = 0
    for u in (ctx.elements() if points is None else points):
        args = shifted_arguments(ctx, f, cs, u)
        e = 0
        for i in K:
            x = args[i]
            if x == 0:
                break
            e += chars[i].multiplier * ctx.dlog(x)
        else:
            hist[e % n] += 1
            continue
        zeros += 1
    return CharSum(tuple(hist), zeros)


def character_tuples(ctx: FieldCtx, cs: CosetSpec, K: Sequence[int]) -> list[dict[int, MultChar]]:
    """All assignments i -> psi_i in X_{t_i}^* for i in K (empty if some t_i = 1)."""
    fams = [characters(ctx, cs.groups[i].index)[1:] for i in K]
    return [dict(zip(K, combo)) for combo in product(*fams)]
