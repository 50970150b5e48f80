"""Exhaustive counting engines and the checks built on them.

Everything here is brute force over a coefficient product space, in a
fixed odometer order (a_{n-1} slowest, each coordinate's admissible set
sorted by discrete log, with 0 first when it is admissible).  Work can be
split over worker processes by the value of a_{n-1}; partial results are
merged in partition order so the output never depends on the worker count.
"""
from __future__ import annotations

import math
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Sequence

from .errors import CharacteristicTooSmall, SearchSpaceTooLarge, ThinIrredError
from .finite_field import FieldCtx, divisors
from .polynomial import (MonicPoly, derivative, discriminant, is_irreducible,
                         poly_mul, resultant, taylor_shift)
from .subgroup_char import (CosetSpec, character_tuples, coset_elements,
                            coset_member, coset_spec, reduce_cyclotomic,
                            shifted_arguments, trivial_cosets,
                            twisted_char_sum)

DEFAULT_SEARCH_CEILING = 10**8
# smaller spaces are scanned in-process whatever the worker count
PARALLEL_MIN_SPACE = 4096

_POOLS: dict[int, ProcessPoolExecutor] = {}


def _pool(workers: int) -> ProcessPoolExecutor:
    if workers not in _POOLS:
        _POOLS[workers] = ProcessPoolExecutor(max_workers=workers)
    return _POOLS[workers]


def search_ceiling(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("THIN_IRRED_CEILING")
    return int(env) if env else DEFAULT_SEARCH_CEILING


# -- parameters and reports --------------------------------------------------

@dataclass(frozen=True)
class CensusParams:
    """What to count: degree, optional discriminant, coefficient universe.

    With ``cs`` given, coefficient i ranges over reps[i] * G_i (so never 0).
    Without it, coefficients range over F_q^* when ``require_nonzero_coeffs``
    is set and over all of F_q otherwise.
    """

    ctx: FieldCtx
    n: int
    d: int | None = None
    cs: CosetSpec | None = None
    require_nonzero_coeffs: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"degree must be >= 2, got {self.n}")
        if self.ctx.p <= self.n:
            raise CharacteristicTooSmall(f"need p > n (p = {self.ctx.p}, n = {self.n})")
        if self.d is not None and self.d == 0:
            raise ValueError("prescribed discriminant must be nonzero")
        if self.cs is not None:
            if self.cs.n != self.n:
                raise ValueError(f"constraint length {self.cs.n} does not match degree {self.n}")
            object.__setattr__(self, "require_nonzero_coeffs", True)

    @property
    def universe(self) -> str:
        if self.cs is not None:
            return "cosets"
        return "nonzero" if self.require_nonzero_coeffs else "all"

    def allowed_sets(self) -> list[list[int]]:
        ctx = self.ctx
        if self.cs is not None:
            return [coset_elements(ctx, h, g) for h, g in zip(self.cs.reps, self.cs.groups)]
        nonzero = sorted(range(1, ctx.q), key=ctx.dlog)
        base = nonzero if self.require_nonzero_coeffs else [0] + nonzero
        return [list(base) for _ in range(self.n)]


@dataclass
class CensusReport:
    exact_count: int
    main_term: Fraction
    error_bound: float | None
    slack: float | None
    enumerated: int
    universe: str
    wall_time: float = 0.0


@dataclass
class BoundOutcome:
    observed: int | Fraction
    ceiling: int | Fraction | float
    holds: bool
    details: dict = field(default_factory=dict)


@dataclass
class ClassReport:
    """One shift orbit {f(X + u)} meeting I_{d,n}.

    ``size`` is the orbit size; ``in_family`` counts the orbit members
    whose coefficients are all nonzero.
    """

    representative: MonicPoly
    size: int
    good: bool
    witnesses: list[tuple[int, int]]
    in_family: int


# -- cached per-polynomial facts ---------------------------------------------

@lru_cache(maxsize=1 << 21)
def irreducible_disc(ctx: FieldCtx, coeffs: tuple[int, ...]) -> int | None:
    """disc of X^n + ... + a_0 when it is irreducible, else None."""
    full = list(coeffs) + [1]
    if not is_irreducible(ctx, full):
        return None
    return discriminant(ctx, full)


@lru_cache(maxsize=1 << 21)
def disc_cached(ctx: FieldCtx, coeffs: tuple[int, ...]) -> int:
    return discriminant(ctx, list(coeffs) + [1])


def derivative_resultant(ctx: FieldCtx, f: MonicPoly, i: int, j: int) -> int:
    """Res(f^(i), f^(j))."""
    full = f.full
    return resultant(ctx, derivative(ctx, full, i), derivative(ctx, full, j))


def zero_resultant_pairs(ctx: FieldCtx, f: MonicPoly) -> list[tuple[int, int]]:
    """Pairs 0 <= i < j <= n-1 with Res(f^(i), f^(j)) = 0."""
    n = f.n
    return [(i, j) for i, j in combinations(range(n), 2)
            if derivative_resultant(ctx, f, i, j) == 0]


# -- the enumeration engine --------------------------------------------------

def _check_space(sets: Sequence[Sequence[int]], ceiling: int | None) -> int:
    size = math.prod(len(s) for s in sets)
    limit = search_ceiling(ceiling)
    if size > limit:
        raise SearchSpaceTooLarge(f"search space {size} exceeds ceiling {limit}")
    return size


def _scan_chunk(ctx: FieldCtx, sets: list[list[int]], target: int | None, mode: str):
    """Histogram of irreducible discriminants (mode 'irred') or of all discriminants
    (mode 'disc') over the product of ``sets``; also the members with disc == target."""
    hist: Counter = Counter()
    members = []
    look = irreducible_disc if mode == "irred" else disc_cached
    for rev in product(*reversed(sets)):
        coeffs = rev[::-1]
        d = look(ctx, coeffs)
        if d is None:
            continue
        hist[d] += 1
        if target is not None and d == target:
            members.append(coeffs)
    return hist, members


def scan(ctx: FieldCtx, sets: Sequence[Sequence[int]], *, target: int | None = None,
         mode: str = "irred", workers: int = 1, ceiling: int | None = None):
    """Run the odometer over ``sets``; returns (disc histogram, members with disc target)."""
    sets = [list(s) for s in sets]
    size = _check_space(sets, ceiling)
    if workers <= 1 or len(sets[-1]) < 2 or size < PARALLEL_MIN_SPACE:
        hist, members = _scan_chunk(ctx, sets, target, mode)
        return dict(hist), members
    chunks = [sets[:-1] + [[top]] for top in sets[-1]]
    hist: Counter = Counter()
    members = []
    futures = [_pool(workers).submit(_scan_chunk, ctx, c, target, mode) for c in chunks]
    for fut in futures:
        h, m = fut.result()
        hist.update(h)
        members.extend(m)
    return dict(hist), members


def theorem_constants(n: int) -> tuple[int, int]:
    """(n(n-1)/2, n^2(n^2-1)(3n+2)/24)."""
    return n * (n - 1) // 2, n * n * (n * n - 1) * (3 * n + 2) // 24


def family_count(ctx: FieldCtx, n: int, d: int, workers: int = 1,
                 ceiling: int | None = None) -> int:
    """#I_{d,n}: irreducibles with all coefficients nonzero and discriminant d."""
    return _family_hist(ctx, n, workers, ceiling).get(d, 0)


def _family_hist(ctx, n, workers=1, ceiling=None) -> dict:
    key = (ctx, n)
    if key not in _FAMILY_CACHE:
        sets = CensusParams(ctx, n).allowed_sets()
        _FAMILY_CACHE[key] = scan(ctx, sets, workers=workers, ceiling=ceiling)[0]
    return _FAMILY_CACHE[key]


_FAMILY_CACHE: dict = {}


def _bound_rhs(q: int, n: int, family: int) -> float:
    c1, c2 = theorem_constants(n)
    return c1 * family / math.sqrt(q) + c2 * q ** (n - 2)


def count_irreducibles(params: CensusParams, workers: int = 1,
                       ceiling: int | None = None) -> CensusReport:
    """Exact #I_n(h, G), or #I_{d,n}(h, G) when params.d is set.

    main_term is (1/n) prod #S_i without d and (#I_{d,n} / (q-1)^n) prod #S_i
    with d, where S_i is the admissible set of coefficient i.
    """
    t0 = time.perf_counter()
    ctx, n = params.ctx, params.n
    sets = params.allowed_sets()
    hist, _ = scan(ctx, sets, workers=workers, ceiling=ceiling)
    prod_sizes = math.prod(len(s) for s in sets)
    if params.d is None:
        count = sum(hist.values())
        main = Fraction(prod_sizes, n)
        bound = slack = None
    else:
        count = hist.get(params.d, 0)
        family = family_count(ctx, n, params.d, workers, ceiling)
        main = Fraction(family * prod_sizes, (ctx.q - 1) ** n)
        bound = _bound_rhs(ctx.q, n, family)
        slack = bound - float(abs(count - main))
    return CensusReport(count, main, bound, slack, prod_sizes, params.universe,
                        time.perf_counter() - t0)


def count_disc_zero(ctx: FieldCtx, n: int, workers: int = 1, ceiling: int | None = None) -> int:
    """#{monic f of degree n over F_q : disc f = 0}, zero coefficients allowed."""
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    sets = CensusParams(ctx, n, require_nonzero_coeffs=False).allowed_sets()
    hist, _ = scan(ctx, sets, mode="disc", workers=workers, ceiling=ceiling)
    return hist.get(0, 0)


def family_members(ctx: FieldCtx, n: int, d: int, workers: int = 1,
                   ceiling: int | None = None) -> list[tuple[int, ...]]:
    """The coefficient tuples of I_{d,n}, in odometer order."""
    sets = CensusParams(ctx, n, d).allowed_sets()
    return scan(ctx, sets, target=d, workers=workers, ceiling=ceiling)[1]


# -- shift classes -----------------------------------------------------------

def shift_orbit(ctx: FieldCtx, f: MonicPoly) -> list[MonicPoly]:
    return [taylor_shift(ctx, f, u) for u in ctx.elements()]


def split_classes(ctx: FieldCtx, n: int, d: int, workers: int = 1,
                  ceiling: int | None = None) -> list[ClassReport]:
    """Partition I_{d,n} by shift equivalence; one report per orbit, ordered by
    least representative."""
    if d == 0:
        raise ValueError("prescribed discriminant must be nonzero")
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    seen: set = set()
    reports = []
    for coeffs in family_members(ctx, n, d, workers, ceiling):
        if coeffs in seen:
            continue
        orbit = {g.coeffs for g in shift_orbit(ctx, MonicPoly(coeffs))}
        seen |= orbit
        rep = MonicPoly(min(orbit))
        witnesses = zero_resultant_pairs(ctx, rep)
        in_family = sum(1 for c in orbit if all(c))
        reports.append(ClassReport(rep, len(orbit), not witnesses, witnesses, in_family))
    reports.sort(key=lambda r: r.representative.coeffs)
    return reports


def bad_class_bound_check(ctx: FieldCtx, n: int, d: int, workers: int = 1) -> BoundOutcome:
    """Observed B against n^2(n^2-1)(3n+2)/24 * q^(n-3)."""
    classes = split_classes(ctx, n, d, workers)
    bad = sum(1 for c in classes if not c.good)
    ceiling = theorem_constants(n)[1] * Fraction(ctx.q) ** (n - 3)
    return BoundOutcome(bad, ceiling, bad <= ceiling, {
        "classes": len(classes),
        "class_sizes": sorted({c.size for c in classes}),
    })


# -- the main inequality -----------------------------------------------------

def sqrt_le(lhs: Fraction, coef: Fraction, q: int) -> bool:
    """Exact test of lhs <= coef / sqrt(q) for coef >= 0."""
    if lhs <= 0:
        return True
    return lhs * lhs * q <= coef * coef


def theorem_bound_check(params: CensusParams, workers: int = 1,
                        ceiling: int | None = None) -> BoundOutcome:
    """|#I_{d,n}(h,G) - #I_{d,n} prod #G_i / (q-1)^n|
    <= n(n-1)/2 #I_{d,n} q^{-1/2} + n^2(n^2-1)(3n+2)/24 q^{n-2}, decided exactly."""
    if params.d is None:
        raise ValueError("theorem check needs a prescribed discriminant")
    if params.cs is None:
        params = CensusParams(params.ctx, params.n, params.d, trivial_cosets(params.ctx, params.n))
    ctx, n, q = params.ctx, params.n, params.ctx.q
    rep = count_irreducibles(params, workers, ceiling)
    family = family_count(ctx, n, params.d, workers, ceiling)
    lhs = abs(rep.exact_count - rep.main_term)
    c1, c2 = theorem_constants(n)
    weil_coef = Fraction(c1 * family)
    bad_term = Fraction(c2) * Fraction(q) ** (n - 2)
    holds = sqrt_le(lhs - bad_term, weil_coef, q)
    return BoundOutcome(lhs, _bound_rhs(q, n, family), holds, {
        "count": rep.exact_count,
        "main_term": rep.main_term,
        "family_count": family,
        "weil_term_coefficient": weil_coef,
        "bad_class_term": bad_term,
        "enumerated": rep.enumerated,
    })


def theorem_grid(ctx: FieldCtx, n: int, seed: int, n_orders: int = 10, n_reps: int = 5,
                 n_d: int = 20) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """Seeded (d, subgroup orders, coset reps) configurations.

    Every d in F_q^* for n = 2; otherwise n_d sampled d (all of them when q - 1 <= n_d).
    """
    rng = random.Random(f"{seed}:{ctx.q}:{n}")
    nonzero = sorted(range(1, ctx.q), key=ctx.dlog)
    if n == 2 or len(nonzero) <= n_d:
        ds = nonzero
    else:
        ds = sorted(rng.sample(nonzero, n_d), key=ctx.dlog)
    all_orders = list(product(divisors(ctx.q - 1), repeat=n))
    orders = sorted(rng.sample(all_orders, min(n_orders, len(all_orders))))
    all_reps = list(product(nonzero, repeat=n))
    reps = rng.sample(all_reps, min(n_reps, len(all_reps)))
    return [(d, o, r) for d in ds for o in orders for r in reps]


# -- corollary and the coarse counts -----------------------------------------

@dataclass
class CorollaryReport:
    count: int
    disc_partition_sum: int
    partition_holds: bool
    main_term: Fraction
    observed_error: Fraction
    error_scale: float
    ratio: float
    per_d: dict


def corollary_check(ctx: FieldCtx, n: int, cs: CosetSpec, workers: int = 1,
                    ceiling: int | None = None) -> CorollaryReport:
    """Sum over d of #I_{d,n}(h,G) against #I_n(h,G), plus the error ratio to
    n^2 q^(n-1/2) + n^5 q^(n-1) (informational)."""
    params = CensusParams(ctx, n, None, cs)
    rep = count_irreducibles(params, workers, ceiling)
    per_d = {}
    for d in range(1, ctx.q):
        per_d[d] = count_irreducibles(CensusParams(ctx, n, d, cs), workers, ceiling).exact_count
    total = sum(per_d.values())
    main = Fraction(math.prod(cs.sizes), n)
    err = abs(rep.exact_count - main)
    q = ctx.q
    scale = n * n * q ** (n - 0.5) + n**5 * q ** (n - 1)
    return CorollaryReport(rep.exact_count, total, total == rep.exact_count, main, err,
                           scale, float(err) / scale, per_d)


@dataclass
class SquareCensusReport:
    count: int
    prediction: Fraction
    deviation: Fraction
    scaled_deviation: float


def square_census(ctx: FieldCtx, n: int, workers: int = 1) -> SquareCensusReport:
    """Irreducibles with every coefficient a nonzero square, against q^n / (n 2^n).

    Exploratory: the known error term has an unspecified n-dependent constant.
    The deviation is reported in units of q^(n-1/2).
    """
    from .subgroup_char import square_cosets

    count = count_irreducibles(CensusParams(ctx, n, None, square_cosets(ctx, n)), workers).exact_count
    pred = Fraction(ctx.q**n, n * 2**n)
    dev = count - pred
    return SquareCensusReport(count, pred, dev, float(dev) / ctx.q ** (n - 0.5))


@dataclass
class StickelbergerReport:
    expected: int
    total: int
    violations: list


def stickelberger_scan(ctx: FieldCtx, n: int, workers: int = 1,
                       ceiling: int | None = None) -> StickelbergerReport:
    """chi_2(disc f) = (-1)^(n-1) for every monic irreducible f of degree n."""
    if ctx.q % 2 == 0:
        raise ValueError("the parity law needs odd q")
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    sets = CensusParams(ctx, n, require_nonzero_coeffs=False).allowed_sets()
    hist, _ = scan(ctx, sets, workers=workers, ceiling=ceiling)
    expected = (-1) ** (n - 1)
    bad_discs = sorted((d for d in hist if ctx.quadratic_character(d) != expected), key=ctx.dlog)
    violations = []
    if bad_discs:
        for d in bad_discs:
            violations.extend(scan(ctx, sets, target=d, ceiling=ceiling)[1])
    return StickelbergerReport(expected, sum(hist.values()), violations)


@dataclass
class ConjectureRow:
    d_dlog: int
    d: int
    parity: int
    count: int
    ratio: Fraction


def conjecture_table(ctx: FieldCtx, n: int, workers: int = 1,
                     ceiling: int | None = None) -> list[ConjectureRow]:
    """#I_{d,n} per d with chi_2(d) and count / ((2/n) q^(n-1)).  Exploratory only."""
    if ctx.q % 2 == 0:
        raise ValueError("needs odd q")
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    hist = _family_hist(ctx, n, workers, ceiling)
    scale = Fraction(2 * ctx.q ** (n - 1), n)
    rows = []
    for d in sorted(range(1, ctx.q), key=ctx.dlog):
        c = hist.get(d, 0)
        rows.append(ConjectureRow(ctx.dlog(d), d, ctx.quadratic_character(d), c, c / scale))
    return rows


# -- variety point counts ----------------------------------------------------

def variety_intersection_count(ctx: FieldCtx, n: int, d: int, i: int, j: int,
                               ceiling: int | None = None) -> BoundOutcome:
    """#{a in F_q^n : disc f = d, Res(f^(i), f^(j)) = 0} against n(n-i)(n-j) q^(n-2)."""
    if not 0 <= i < j <= n - 1:
        raise ValueError(f"need 0 <= i < j <= n-1, got ({i}, {j})")
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    sets = CensusParams(ctx, n, require_nonzero_coeffs=False).allowed_sets()
    _check_space(sets, ceiling)
    count = 0
    for rev in product(*reversed(sets)):
        coeffs = rev[::-1]
        if disc_cached(ctx, coeffs) != d:
            continue
        if derivative_resultant(ctx, MonicPoly(coeffs), i, j) == 0:
            count += 1
    ceil = n * (n - i) * (n - j) * ctx.q ** (n - 2)
    return BoundOutcome(count, ceil, count <= ceil, {"i": i, "j": j, "d": d})


# -- specializations ---------------------------------------------------------

@dataclass
class DiscSpecializationReport:
    polynomial: list[int]
    disc_direct: int
    disc_roots: int
    agree: bool
    printed_exponent_1: int
    printed_exponent_2: int
    matches_exponent_1: bool
    matches_exponent_2: bool
    degenerate: bool


class _QuadExt:
    """F_q[s]/(s^2 - b) on pairs (x, y) = x + y s; a ring even when b is a square."""

    def __init__(self, ctx: FieldCtx, b: int):
        self.ctx, self.b = ctx, b

    def sub(self, u, v):
        c = self.ctx
        return (c.sub(u[0], v[0]), c.sub(u[1], v[1]))

    def mul(self, u, v):
        c = self.ctx
        x = c.add(c.mul(u[0], v[0]), c.mul(self.b, c.mul(u[1], v[1])))
        y = c.add(c.mul(u[0], v[1]), c.mul(u[1], v[0]))
        return (x, y)


def root_product_disc(ctx: FieldCtx, b: int, bs: Sequence[int]) -> int:
    """prod_{i<j} (alpha_i - alpha_j)^2 over the roots sqrt(b), -sqrt(b), b_3, ..., b_n."""
    ring = _QuadExt(ctx, b)
    roots = [(0, 1), (0, ctx.neg(1))] + [(x, 0) for x in bs]
    acc = (1, 0)
    for u, v in combinations(roots, 2):
        diff = ring.sub(u, v)
        acc = ring.mul(acc, ring.mul(diff, diff))
    assert acc[1] == 0
    return acc[0]


def specialization_check_disc(ctx: FieldCtx, n: int, b: int,
                              bs: Sequence[int]) -> DiscSpecializationReport:
    """disc((X^2 - b) prod (X - b_i)) by resultants and by roots, plus both
    exponent readings of 4b prod (b_i - b_j)^2 prod (b_i^2 - b)^e."""
    if ctx.p == 2 or ctx.p <= n:
        raise CharacteristicTooSmall(f"need odd p > n (p = {ctx.p}, n = {n})")
    if n < 3 or len(bs) != n - 2:
        raise ValueError(f"need n >= 3 and n - 2 values b_3..b_n, got n = {n}, {len(bs)} values")
    f = [ctx.neg(b), 0, 1]
    for x in bs:
        f = poly_mul(ctx, f, [ctx.neg(x), 1])
    direct = discriminant(ctx, f)
    oracle = root_product_disc(ctx, b, bs)
    pair = 1
    for x, y in combinations(bs, 2):
        diff = ctx.sub(x, y)
        pair = ctx.mul(pair, ctx.mul(diff, diff))
    cross = 1
    for x in bs:
        cross = ctx.mul(cross, ctx.sub(ctx.mul(x, x), b))
    head = ctx.mul(ctx.mul(ctx.scalar(4), b), pair)
    e1 = ctx.mul(head, cross)
    e2 = ctx.mul(head, ctx.mul(cross, cross))
    return DiscSpecializationReport(f, direct, oracle, direct == oracle, e1, e2,
                                    e1 == oracle, e2 == oracle, direct == 0)


@dataclass
class ResSpecializationReport:
    direct: int
    closed_form: int
    sign: int | None


def specialization_check_res(ctx: FieldCtx, n: int, i: int, j: int,
                             a: int) -> ResSpecializationReport:
    """Res(f^(i), f^(j)) for f = X^n + a X^i against
    (n(n-1)...(n-j+1))^(n-i) (i!)^(n-j) a^(n-j); sign is +1, -1 or None (mismatch)."""
    if ctx.p <= n:
        raise CharacteristicTooSmall(f"need p > n (p = {ctx.p}, n = {n})")
    if not 0 <= i < j <= n - 1:
        raise ValueError(f"need 0 <= i < j <= n-1, got ({i}, {j})")
    if a == 0:
        raise ValueError("a must be nonzero")
    coeffs = [0] * n
    coeffs[i] = ctx.add(coeffs[i], a)
    f = MonicPoly(tuple(coeffs))
    direct = derivative_resultant(ctx, f, i, j)
    falling = math.prod(range(n - j + 1, n + 1))
    form = ctx.mul(ctx.pow(ctx.scalar(falling), n - i),
                   ctx.mul(ctx.pow(ctx.scalar(math.factorial(i)), n - j), ctx.pow(a, n - j)))
    if direct == form:
        sign = 1
    elif direct == ctx.neg(form):
        sign = -1
    else:
        sign = None
    return ResSpecializationReport(direct, form, sign)


# -- character sums over the classes -----------------------------------------

@dataclass
class WeilReport:
    """``violations`` are sums above ``ceiling`` = (n(n-1)/2) sqrt(q).

    ``degree_violations`` compares each sum with the classical root-count
    bound (sum_{i in K} (n - i) - 1) sqrt(q) instead.
    """

    ceiling: float
    max_abs: float
    sums_checked: int
    good_classes: int
    bad_classes_skipped: int
    violations: list
    degree_violations: list


def admissible_subsets(cs: CosetSpec) -> list[tuple[int, ...]]:
    """Nonempty K with every t_i > 1 for i in K."""
    idx = [i for i in range(cs.n) if cs.groups[i].index > 1]
    return [K for r in range(1, len(idx) + 1) for K in combinations(idx, r)]


def weil_scan(ctx: FieldCtx, n: int, d: int, cs: CosetSpec, workers: int = 1,
              tol: float = 1e-6) -> WeilReport:
    """Every twisted sum over every good class of I_{d,n} against (n(n-1)/2) sqrt(q)."""
    classes = split_classes(ctx, n, d, workers)
    ceil = theorem_constants(n)[0] * math.sqrt(ctx.q)
    worst, checked, violations, degree_violations = 0.0, 0, [], []
    good = [c for c in classes if c.good]
    for cls in good:
        f = cls.representative
        for K in admissible_subsets(cs):
            roots = sum(n - i for i in K)
            for chars in character_tuples(ctx, cs, K):
                s = abs(twisted_char_sum(ctx, f, K, chars, cs).value)
                checked += 1
                worst = max(worst, s)
                entry = {"f": list(f.coeffs), "K": list(K),
                         "multipliers": [chars[i].multiplier for i in K], "abs": s}
                if s > ceil + tol:
                    violations.append(entry)
                if s > (roots - 1) * math.sqrt(ctx.q) + tol:
                    degree_violations.append(entry)
    return WeilReport(ceil, worst, checked, len(good), len(classes) - len(good),
                      violations, degree_violations)


@dataclass
class DecompositionReport:
    """Both readings of t #J_f(h,G) = q + R for one f.

    R sums the twisted sums over all nonempty K.  ``boundary`` is the
    contribution of the shifts u where some shifted coefficient vanishes,
    which the principal-character term 1 overcounts; the exact identity is
    t #J_f - q = R - boundary.
    """

    shifts_in_family: int
    t: int
    R: tuple[int, ...]
    boundary: tuple[int, ...]
    zero_shifts: int
    exact_holds: bool
    literal_holds: bool


def _cyc_add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> tuple[int, ...]:
    return tuple(x + sign * y for x, y in zip(a, b))


def decomposition_check(ctx: FieldCtx, f: MonicPoly, cs: CosetSpec) -> DecompositionReport:
    n = f.n
    m = ctx.q - 1
    t = math.prod(cs.indices)
    in_family = sum(
        1 for u in ctx.elements()
        if all(coset_member(ctx, a, h, g)
               for a, h, g in zip(taylor_shift(ctx, f, u).coeffs, cs.reps, cs.groups)))
    zero_us = [u for u in ctx.elements() if not all(shifted_arguments(ctx, f, cs, u))]
    phi_len = len(reduce_cyclotomic([0] * m, m))
    R = boundary = (0,) * phi_len
    for r in range(1, n + 1):
        for K in combinations(range(n), r):
            for chars in character_tuples(ctx, cs, K):
                R = _cyc_add(R, twisted_char_sum(ctx, f, K, chars, cs).exact)
                if zero_us:
                    boundary = _cyc_add(boundary,
                                        twisted_char_sum(ctx, f, K, chars, cs, zero_us).exact)
    # the K = {} term at a boundary shift is the principal 1
    boundary = _cyc_add(boundary, (len(zero_us),) + (0,) * (phi_len - 1))
    lhs = (t * in_family - ctx.q,) + (0,) * (phi_len - 1)
    exact = lhs == _cyc_add(R, boundary, -1)
    return DecompositionReport(in_family, t, R, boundary, len(zero_us), exact, lhs == R)


def good_family_members(ctx: FieldCtx, n: int, d: int, workers: int = 1) -> list[MonicPoly]:
    """Members of I_{d,n} lying in good classes."""
    out = []
    for coeffs in family_members(ctx, n, d, workers):
        f = MonicPoly(coeffs)
        if not zero_resultant_pairs(ctx, f):
            out.append(f)
    return out


__all__ = [
    "BoundOutcome", "CensusParams", "CensusReport", "ClassReport", "CorollaryReport",
    "ConjectureRow", "DecompositionReport", "StickelbergerReport", "WeilReport",
    "bad_class_bound_check", "conjecture_table", "corollary_check", "count_disc_zero",
    "count_irreducibles", "decomposition_check", "family_count", "family_members",
    "good_family_members", "irreducible_disc", "scan", "split_classes", "square_census",
    "specialization_check_disc", "specialization_check_res", "stickelberger_scan",
    "theorem_bound_check", "theorem_grid", "variety_intersection_count", "weil_scan",
    "coset_spec", "ThinIrredError",
]
