import itertools
import math
import random
from fractions import Fraction

import pytest

from thin_irred.census import (
    CensusParams, bad_class_bound_check, conjecture_table, corollary_check, count_disc_zero,
    count_irreducibles, decomposition_check, family_count, family_members, root_product_disc,
    scan, shift_orbit, specialization_check_disc, specialization_check_res, split_classes,
    square_census, stickelberger_scan, theorem_bound_check, theorem_constants, theorem_grid,
    variety_intersection_count, weil_scan, zero_resultant_pairs)
from thin_irred.errors import CharacteristicTooSmall, SearchSpaceTooLarge
from thin_irred.finite_field import divisors, make_field
from thin_irred.polynomial import MonicPoly, derivative, discriminant, resultant, taylor_shift
from thin_irred.subgroup_char import coset_spec, square_cosets, trivial_cosets

from oracles import legendre, naive_irreducible, necklace

F7 = make_field(7)
NONSQUARES_7 = [3, 5, 6]


def test_count_examples():
    assert count_irreducibles(CensusParams(F7, 2)).exact_count == 18
    rep = count_irreducibles(CensusParams(F7, 2, require_nonzero_coeffs=False))
    assert rep.exact_count == 21 and rep.universe == "all" and rep.enumerated == 49
    sq = count_irreducibles(CensusParams(F7, 2, cs=square_cosets(F7, 2)))
    assert sq.main_term == Fraction(9, 2)
    # brute force: a_0, a_1 in {1, 2, 4}, irreducible iff a_1^2 - 4 a_0 a nonsquare
    expected = sum(1 for a0 in (1, 2, 4) for a1 in (1, 2, 4) if legendre(a1 * a1 - 4 * a0, 7) == -1)
    assert sq.exact_count == expected == 3


def test_params_validation():
    with pytest.raises(CharacteristicTooSmall):
        CensusParams(make_field(3), 3)
    with pytest.raises(ValueError):
        CensusParams(F7, 1)
    with pytest.raises(ValueError):
        CensusParams(F7, 2, d=0)
    p = CensusParams(F7, 2, cs=square_cosets(F7, 2), require_nonzero_coeffs=False)
    assert p.require_nonzero_coeffs and p.universe == "cosets"


def test_ceiling_enforced(monkeypatch):
    with pytest.raises(SearchSpaceTooLarge):
        count_irreducibles(CensusParams(F7, 3), ceiling=100)
    monkeypatch.setenv("THIN_IRRED_CEILING", "10")
    with pytest.raises(SearchSpaceTooLarge):
        count_disc_zero(F7, 2)


@pytest.mark.parametrize("p,k,n,expected", [(5, 1, 3, 25), (7, 1, 2, 7), (3, 2, 2, 9)])
def test_carlitz_examples(p, k, n, expected):
    assert count_disc_zero(make_field(p, k), n) == expected


@pytest.mark.parametrize("p,n", [(5, 2), (5, 3), (7, 2), (7, 3), (11, 2), (11, 3)])
def test_nonzero_count_against_trial_division(p, n):
    F = make_field(p)
    expected = sum(naive_irreducible(list(low) + [1], p)
                   for low in itertools.product(range(1, p), repeat=n))
    assert count_irreducibles(CensusParams(F, n)).exact_count == expected
    assert count_irreducibles(CensusParams(F, n, require_nonzero_coeffs=False)).exact_count \
        == necklace(p, n)


@pytest.mark.parametrize("p,n", [(7, 2), (7, 3), (11, 2)])
def test_partition_law(p, n):
    F = make_field(p)
    rng = random.Random(p * n)
    for _ in range(4):
        orders = [rng.choice(divisors(p - 1)) for _ in range(n)]
        reps = [rng.randrange(1, p) for _ in range(n)]
        cs = coset_spec(F, orders, reps)
        total = count_irreducibles(CensusParams(F, n, cs=cs)).exact_count
        assert sum(count_irreducibles(CensusParams(F, n, d, cs)).exact_count
                   for d in range(1, p)) == total
        rep = corollary_check(F, n, cs)
        assert rep.partition_holds and rep.count == total


def test_corollary_trivial_cosets():
    rep = corollary_check(F7, 2, trivial_cosets(F7, 2))
    assert rep.count == 18 and rep.main_term == 18 and rep.observed_error == 0


@pytest.mark.parametrize("d", NONSQUARES_7)
def test_split_classes_q7_n2(d):
    classes = split_classes(F7, 2, d)
    assert classes
    assert all(c.size == 7 and c.good for c in classes)
    members = set(family_members(F7, 2, d))
    covered = set()
    for c in classes:
        orbit = {g.coeffs for g in shift_orbit(F7, c.representative)}
        assert c.representative.coeffs == min(orbit)
        assert c.in_family == len(orbit & members)
        covered |= orbit & members
    assert covered == members


@pytest.mark.parametrize("d", [1, 2, 4])
def test_square_disc_has_no_classes(d):
    assert split_classes(F7, 2, d) == []


@pytest.mark.parametrize("p,n", [(7, 3), (11, 3), (13, 2), (7, 4)])
def test_class_size_and_goodness_invariant(p, n):
    F = make_field(p)
    rng = random.Random(p + n)
    ds = rng.sample(range(1, p), 3)
    for d in ds:
        for c in split_classes(F, n, d):
            orbit = shift_orbit(F, c.representative)
            assert c.size == p == len({g.coeffs for g in orbit})
            for g in orbit:
                assert (not zero_resultant_pairs(F, g)) == c.good


def test_bad_class_bound_examples():
    for d in NONSQUARES_7:
        out = bad_class_bound_check(F7, 2, d)
        assert out.observed == 0 and out.ceiling == Fraction(4, 7) and out.holds
    for d in range(1, 7):
        out = bad_class_bound_check(F7, 3, d)
        assert out.ceiling == 33 and out.holds


def test_theorem_constants():
    assert [theorem_constants(n) for n in (2, 3, 4)] == [(1, 4), (3, 33), (6, 140)]


@pytest.mark.parametrize("d", NONSQUARES_7)
def test_theorem_examples_q7(d):
    triv = theorem_bound_check(CensusParams(F7, 2, d))
    assert triv.observed == 0 and triv.holds
    sq = theorem_bound_check(CensusParams(F7, 2, d, square_cosets(F7, 2)))
    assert sq.holds
    assert isinstance(sq.observed, Fraction)


def test_theorem_q13_n3_mixed_cosets():
    F = make_field(13)
    cs = coset_spec(F, [4, 4, 4], [1, 2, 5])
    for d in (1, 2, 7):
        assert theorem_bound_check(CensusParams(F, 3, d, cs)).holds


def test_theorem_grid_is_seeded():
    a = theorem_grid(F7, 3, seed=5)
    assert a == theorem_grid(F7, 3, seed=5)
    assert len({d for d, _, _ in a}) == 6
    assert len({o for _, o, _ in a}) == 10 and len({r for _, _, r in a}) == 5


def test_sqrt_comparison_is_exact():
    from thin_irred.census import sqrt_le
    # 2 <= 4 / sqrt(4) is an equality; 2 + 1e-30 is not
    assert sqrt_le(Fraction(2), Fraction(4), 4)
    assert not sqrt_le(Fraction(2) + Fraction(1, 10**30), Fraction(4), 4)


def test_stickelberger_examples():
    r = stickelberger_scan(F7, 2)
    assert r.total == 21 and r.expected == -1 and not r.violations
    r = stickelberger_scan(make_field(5), 3)
    assert r.expected == 1 and not r.violations and r.total == necklace(5, 3)
    assert not stickelberger_scan(make_field(3, 2), 2).violations


def test_conjecture_examples():
    rows = conjecture_table(F7, 2)
    assert [r.d_dlog for r in rows] == list(range(6))
    for r in rows:
        assert r.count == (6 if r.parity == -1 else 0)
        assert r.ratio == Fraction(r.count, 7)
    for r in conjecture_table(make_field(5), 3):
        if r.parity == -1:
            assert r.count == 0


def test_variety_examples():
    out = variety_intersection_count(F7, 3, 1, 0, 1)
    assert out.ceiling == 126 and out.holds
    assert variety_intersection_count(F7, 3, 1, 0, 1).observed == sum(
        1 for low in itertools.product(range(7), repeat=3)
        if discriminant(F7, MonicPoly(low)) == 1
        and resultant(F7, [*low, 1], derivative(F7, [*low, 1], 1)) == 0)
    for d in NONSQUARES_7:
        assert variety_intersection_count(F7, 2, d, 0, 1).observed == 0
    out = variety_intersection_count(make_field(11), 3, 2, 1, 2)
    assert out.ceiling == 66 and out.holds


def test_specialization_disc_examples():
    r = specialization_check_disc(F7, 3, 1, [2])
    assert r.disc_direct == r.disc_roots == 1 and not r.degenerate
    r = specialization_check_disc(F7, 3, 1, [1])
    assert r.degenerate and r.disc_direct == 0 == r.disc_roots
    r = specialization_check_disc(F7, 4, 2, [1, 3])
    assert r.agree


def test_root_product_oracle_nonsquare_b():
    # b = 3 is a nonsquare mod 7; (X^2 - 3)(X - 1): disc = 4*3 * (1 - 3)^2 by hand
    assert root_product_disc(F7, 3, [1]) == (4 * 3 * 4) % 7


def test_specialization_res_examples():
    r = specialization_check_res(F7, 2, 0, 1, 3)
    assert r.direct == 5 and r.closed_form == 5 and r.sign is not None
    assert specialization_check_res(F7, 3, 1, 2, 1).sign is not None
    with pytest.raises(ValueError):
        specialization_check_res(F7, 3, 1, 2, 0)


def test_weil_example_q7():
    rep = weil_scan(F7, 2, 3, square_cosets(F7, 2))
    assert rep.sums_checked > 0 and not rep.violations
    assert rep.ceiling == pytest.approx(math.sqrt(7))


def test_decomposition_exact_q7():
    sq = square_cosets(F7, 2)
    for d in NONSQUARES_7:
        for coeffs in family_members(F7, 2, d):
            r = decomposition_check(F7, MonicPoly(coeffs), sq)
            assert r.exact_holds
            assert r.literal_holds == (r.zero_shifts == 0)


def test_square_census_reports():
    r = square_census(F7, 2)
    assert r.count == 3 and r.prediction == Fraction(49, 8)


@pytest.mark.parametrize("p,n", [(7, 3), (11, 3)])
def test_scan_determinism_across_workers(p, n):
    F = make_field(p)
    sets = CensusParams(F, n).allowed_sets()
    one = scan(F, sets, target=1, workers=1)
    four = scan(F, sets, target=1, workers=4)
    assert one == four


def test_family_count_matches_members():
    for d in range(1, 7):
        assert family_count(F7, 3, d) == len(family_members(F7, 3, d))


def test_shift_orbit_brute():
    f = MonicPoly((3, 1))
    assert [g.coeffs for g in shift_orbit(F7, f)] == [taylor_shift(F7, f, u).coeffs for u in range(7)]
