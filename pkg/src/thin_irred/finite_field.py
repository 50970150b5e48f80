"""Exact arithmetic in F_q, q = p^k.

Elements are plain Python ints in ``range(q)``.  For k > 1 the integer
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` encodes the residue polynomial
``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` modulo the field's defining
polynomial; for k = 1 the int is the residue itself.  This keeps the
census inner loops free of object allocation.

A :class:`FieldCtx` is immutable after construction and carries a fixed
primitive element together with exp/log tables (materialized for fields
up to ``table_limit`` elements, baby-step giant-step above that).
"""
from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CeilingExceeded, DivisionByZero, LogOfZero, NotPrime, ParseError

DEFAULT_CEILING = 2**20
DEFAULT_TABLE_LIMIT = 2**20
_ADD_TABLE_LIMIT = 1024

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n >= 1, ascending (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


class FieldCtx:
    """The finite field F_{p^k} with a canonical model.

    Use :func:`make_field` rather than calling this directly; it picks the
    modulus and generator deterministically.
    """

    def __init__(self, p: int, k: int, modulus: tuple[int, ...] | None,
                 table_limit: int = DEFAULT_TABLE_LIMIT):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.table_limit = table_limit
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._add_table: list[int] | None = None
        self._neg_table: list[int] | None = None
        self._bsgs: tuple[int, dict[int, int], int] | None = None

        if k == 1:
            self.add = self._add_p
            self.sub = self._sub_p
            self.neg = self._neg_p
            self.mul = self._mul_p
        else:
            self._pw = [p**i for i in range(k)]
            self._neg_table = [self._raw_neg(a) for a in range(self.q)]
            self.neg = self._neg_table.__getitem__
            if self.q <= _ADD_TABLE_LIMIT:
                q = self.q
                self._add_table = [self._raw_add(a, b) for a in range(q) for b in range(q)]
                self.add = self._add_tab
            else:
                self.add = self._raw_add
            self.sub = self._sub_ext
            self.mul = self._raw_mul

        self.generator = self._find_generator()
        if self.q <= table_limit:
            self._build_tables()
            if k > 1:
                self.mul = self._mul_tab

    # -- identity -----------------------------------------------------------
    def __repr__(self) -> str:
        if self.k == 1:
            return f"FieldCtx(F_{self.p})"
        return f"FieldCtx(F_{self.q} = F_{self.p}[x]/({format_poly(self.modulus)}))"

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, FieldCtx) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __reduce__(self):
        return (make_field, (self.p, self.k, max(self.q, DEFAULT_CEILING), self.table_limit))

    @property
    def tables(self) -> bool:
        return self._log is not None

    # -- prime-field arithmetic --------------------------------------------
    def _add_p(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def _sub_p(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def _neg_p(self, a: int) -> int:
        return -a % self.p

    def _mul_p(self, a: int, b: int) -> int:
        return a * b % self.p

    # -- extension-field arithmetic ----------------------------------------
    def digits(self, a: int) -> list[int]:
        """Residue-polynomial coefficients (c_0, ..., c_{k-1}) of a."""
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) > self.k:
            raise ValueError(f"expected at most {self.k} digits, got {len(ds)}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(ds))

    def _raw_add(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        for w in self._pw:
            out += ((a % p + b % p) % p) * w
            a //= p
            b //= p
        return out

    def _raw_neg(self, a: int) -> int:
        p = self.p
        out = 0
        for w in self._pw:
            out += (-(a % p) % p) * w
            a //= p
        return out

    def _add_tab(self, a: int, b: int) -> int:
        return self._add_table[a * self.q + b]

    def _sub_ext(self, a: int, b: int) -> int:
        return self.add(a, self._neg_table[b])

    def _raw_mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        p, k = self.p, self.k
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * k - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        mod = self.modulus
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * mod[i]
        return self.from_digits([c % p for c in prod[:k]])

    def _mul_tab(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    # -- generator and tables ----------------------------------------------
    def _raw_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        cofactors = [n // ell for ell in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._raw_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("cyclic group has no generator")  # unreachable

    def _build_tables(self) -> None:
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [-1] * self.q
        x = 1
        for e in range(n):
            exp[e] = x
            log[x] = e
            x = self._raw_mul(x, self.generator)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log

    # -- public operations --------------------------------------------------
    def scalar(self, m: int) -> int:
        """The image of the integer m in F_q."""
        return m % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._raw_pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            if a == 0:
                raise DivisionByZero("negative power of zero")
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        return self._raw_pow(a, e % (self.q - 1))

    def dlog(self, x: int) -> int:
        """The exponent e in [0, q-2] with generator**e == x."""
        if x == 0:
            raise LogOfZero("discrete log of zero")
        if self._log is not None:
            return self._log[x]
        return self._bsgs_log(x)

    def _bsgs_log(self, x: int) -> int:
        n = self.q - 1
        if self._bsgs is None:
            m = math.isqrt(n) + 1
            baby = {}
            y = 1
            for j in range(m):
                baby.setdefault(y, j)
                y = self.mul(y, self.generator)
            self._bsgs = (m, baby, self.pow(self.generator, -m))
        m, baby, giant = self._bsgs
        y = x
        for i in range(m + 1):
            j = baby.get(y)
            if j is not None:
                return (i * m + j) % n
            y = self.mul(y, giant)
        raise AssertionError("element outside the multiplicative group")  # unreachable

    def exp(self, e: int) -> int:
        """generator**e."""
        if self._exp is not None:
            return self._exp[e % (self.q - 1)]
        return self.pow(self.generator, e)

    def is_square(self, a: int) -> bool:
        return a != 0 and (self.q % 2 == 0 or self.dlog(a) % 2 == 0)

    def quadratic_character(self, a: int) -> int:
        """chi_2(a) in {-1, 0, 1}; q must be odd."""
        if a == 0:
            return 0
        return 1 if self.dlog(a) % 2 == 0 else -1

    def elements(self) -> range:
        return range(self.q)

    def nonzero_by_dlog(self) -> list[int]:
        """F_q^* listed as generator**0, generator**1, ..."""
        return [self.exp(e) for e in range(self.q - 1)]

    # -- literals -----------------------------------------------------------
    def parse(self, text: str) -> int:
        """Parse ``"5"`` (k = 1) or ``"2+1*x+x^2"`` style literals."""
        return parse_element(self, text)

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in enumerate(self.digits(a)):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return "+".join(terms) if terms else "0"


_TERM = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def parse_element(ctx: FieldCtx, text: str) -> int:
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty element literal")
    if ctx.k == 1:
        if not s.isdigit() or int(s) >= ctx.q:
            raise ParseError(f"element literal {text!r} must be an integer in [0, {ctx.q - 1}]")
        return int(s)
    digits = [0] * ctx.k
    for term in s.split("+"):
        m = _TERM.match(term)
        if not term or m is None or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad term {term!r} in element literal {text!r}")
        coeff = int(m.group(1)) if m.group(1) is not None else 1
        power = 0 if m.group(2) is None else int(m.group(3) or 1)
        if power >= ctx.k or coeff >= ctx.p:
            raise ParseError(f"term {term!r} out of range for F_{ctx.q}")
        digits[power] = (digits[power] + coeff) % ctx.p
    return ctx.from_digits(digits)


def format_poly(coeffs: Sequence[int] | None, var: str = "X") -> str:
    """Human-readable form of a coefficient list (low to high)."""
    if coeffs is None:
        return "-"
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


def _lex_monics(p: int, k: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-k polynomials over F_p, lower coefficients in ascending integer order."""
    for code in range(p**k):
        low = []
        for _ in range(k):
            code, r = divmod(code, p)
            low.append(r)
        yield tuple(low) + (1,)


@lru_cache(maxsize=64)
def make_field(p: int, k: int = 1, ceiling: int = DEFAULT_CEILING,
               table_limit: int = DEFAULT_TABLE_LIMIT) -> FieldCtx:
    """Build F_{p^k}.

    The modulus (k > 1) is the first irreducible monic of degree k in
    ascending order of the integer encoding of its lower coefficients; the
    generator is the smallest element (by integer encoding) of order q - 1.

    >>> make_field(7).generator
    3
    >>> make_field(3, 2).modulus
    (1, 0, 1)
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"p must be prime, got {p}")
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if p**k > ceiling:
        raise CeilingExceeded(f"q = {p}^{k} exceeds the field ceiling {ceiling}")
    if k == 1:
        return FieldCtx(p, 1, None, table_limit)
    from .polynomial import is_irreducible

    base = make_field(p, 1)
    for mod in _lex_monics(p, k):
        if is_irreducible(base, mod):
            return FieldCtx(p, k, mod, table_limit)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def arith(ctx: FieldCtx, a: int, b: int, kind: str) -> int:
    """Apply one of ``add``, ``sub``, ``mul``, ``div``."""
    if kind == "add":
        return ctx.add(a, b)
    if kind == "sub":
        return ctx.sub(a, b)
    if kind == "mul":
        return ctx.mul(a, b)
    if kind == "div":
        return ctx.div(a, b)
    raise ValueError(f"unknown operation {kind!r}")


def power(ctx: FieldCtx, a: int, e: int) -> int:
    return ctx.pow(a, e)


def discrete_log(ctx: FieldCtx, x: int) -> int:
    return ctx.dlog(x)
