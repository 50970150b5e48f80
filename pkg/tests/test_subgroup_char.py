import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thin_irred.errors import NotADivisor, PrincipalCharacter
from thin_irred.finite_field import divisors, make_field
from thin_irred.polynomial import MonicPoly, taylor_shift
from thin_irred.subgroup_char import (
    character_sum, character_tuples, characters, char_eval, coset_elements, coset_indicator,
    coset_member, coset_spec, coset_transversal, cyclotomic_poly, exact_integer,
    quadratic_character, reduce_cyclotomic, square_cosets, subgroup, subgroup_elements,
    trivial_cosets, twisted_char_sum)

from oracles import legendre

F7 = make_field(7)


def test_subgroup_elements_examples():
    assert subgroup_elements(F7, 3) == [1, 2, 4]
    assert sorted(subgroup_elements(F7, 6)) == [1, 2, 3, 4, 5, 6]
    with pytest.raises(NotADivisor):
        subgroup_elements(F7, 4)


def test_coset_member_examples():
    G3 = subgroup(F7, 3)
    assert coset_member(F7, 3, 3, G3)
    assert not coset_member(F7, 5, 1, G3)
    for h in range(1, 7):
        assert not coset_member(F7, 0, h, G3)


def test_characters_examples():
    assert [c.multiplier for c in characters(F7, 2)] == [0, 3]
    assert len(characters(F7, 1)) == 1 and characters(F7, 1)[0].principal
    assert [c.order for c in characters(F7, 6)] == [1, 6, 3, 2, 3, 6]
    with pytest.raises(NotADivisor):
        characters(F7, 4)


def test_char_eval_examples():
    chi0, chi2 = characters(F7, 2)
    v = char_eval(F7, chi0, 5)
    assert not v.zero and v.exponent == 0
    v = char_eval(F7, chi2, 2)
    assert not v.zero and v.exponent == 0
    assert char_eval(F7, chi2, 0).zero
    assert char_eval(F7, chi0, 0).zero


def test_coset_indicator_examples():
    sq = square_cosets(F7, 2)
    assert coset_indicator(F7, MonicPoly((3, 1)), 0, sq) == 0
    assert coset_indicator(F7, MonicPoly((2, 1)), 0, sq) == 1
    triv = trivial_cosets(F7, 2)
    for low in itertools.product(range(7), repeat=2):
        for u in range(7):
            g = taylor_shift(F7, MonicPoly(low), u)
            assert coset_indicator(F7, MonicPoly(low), u, triv) == int(all(g.coeffs))


def test_twisted_sum_examples():
    chi0, chi2 = characters(F7, 2)
    sq = square_cosets(F7, 2)
    s = twisted_char_sum(F7, MonicPoly((1, 0)), [0], {0: chi2}, sq)
    assert exact_integer(s.histogram, 6) == -1
    assert abs(s.value - (-1)) < 1e-9
    assert exact_integer(s.histogram, 6) == sum(legendre(u * u + 1, 7) for u in range(7))
    with pytest.raises(PrincipalCharacter):
        twisted_char_sum(F7, MonicPoly((1, 0)), [0], {0: chi0}, sq)


def test_cyclotomic_small():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient outside {-1, 0, 1}
    assert min(cyclotomic_poly(105)) == -2


FIELDS_UPTO_121 = [(p, k) for p in range(2, 122) for k in range(1, 8)
                   if all(p % d for d in range(2, p)) and 2 < p**k <= 121]


@pytest.mark.parametrize("p,k", FIELDS_UPTO_121)
def test_orthogonality_exhaustive(p, k):
    F = make_field(p, k)
    n = F.q - 1
    for chi in characters(F, n):
        s = character_sum(F, chi)
        assert s.zeros == 0
        expected = n if chi.principal else 0
        assert exact_integer(s.histogram, n) == expected
        assert abs(s.value - expected) < 1e-6


@pytest.mark.parametrize("s0,s1", list(itertools.product(divisors(6), repeat=2)))
def test_indicator_equals_membership_q7(s0, s1):
    G0, G1 = subgroup(F7, s0), subgroup(F7, s1)
    for h0, h1 in itertools.product(coset_transversal(F7, G0), coset_transversal(F7, G1)):
        cs = coset_spec(F7, [s0, s1], [h0, h1])
        for low in itertools.product(range(7), repeat=2):
            f = MonicPoly(low)
            for u in range(7):
                g = taylor_shift(F7, f, u)
                direct = coset_member(F7, g.coeffs[0], h0, G0) and coset_member(F7, g.coeffs[1], h1, G1)
                assert coset_indicator(F7, f, u, cs) == int(direct)


@pytest.mark.parametrize("p,k,n", [(11, 1, 3), (13, 1, 3), (5, 2, 3), (13, 1, 4)])
def test_indicator_equals_membership_random(p, k, n):
    F = make_field(p, k)
    divs = divisors(F.q - 1)
    rng = random.Random(f"ind{p}{k}{n}")
    for _ in range(60):
        orders = [rng.choice(divs) for _ in range(n)]
        reps = [rng.randrange(1, F.q) for _ in range(n)]
        cs = coset_spec(F, orders, reps)
        f = MonicPoly(tuple(rng.randrange(F.q) for _ in range(n)))
        u = rng.randrange(F.q)
        g = taylor_shift(F, f, u)
        direct = all(coset_member(F, a, h, grp) for a, h, grp in zip(g.coeffs, reps, cs.groups))
        assert coset_indicator(F, f, u, cs) == int(direct)


def test_coset_elements_partition():
    F = make_field(13)
    for s in divisors(12):
        grp = subgroup(F, s)
        seen = []
        for h in coset_transversal(F, grp):
            els = coset_elements(F, h, grp)
            assert len(els) == s
            assert all(coset_member(F, x, h, grp) for x in els)
            seen += els
        assert sorted(seen) == list(range(1, 13))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(7, 1), (13, 1), (3, 2), (5, 2), (2, 4)]), st.data())
def test_character_closure(pk, data):
    F = make_field(*pk)
    t = data.draw(st.sampled_from(divisors(F.q - 1)))
    fam = characters(F, t)
    a, b = data.draw(st.sampled_from(fam)), data.draw(st.sampled_from(fam))
    c = a * b
    assert c in fam
    for x in range(1, F.q):
        assert char_eval(F, c, x) == char_eval(F, a, x) * char_eval(F, b, x)


@pytest.mark.parametrize("p,k", [(3, 1), (7, 1), (11, 1), (13, 1), (3, 2), (5, 2), (7, 2), (3, 3)])
def test_quadratic_character_matches_squares(p, k):
    F = make_field(p, k)
    chi2 = quadratic_character(F)
    squares = {F.mul(x, x) for x in range(1, F.q)}
    for x in range(F.q):
        v = char_eval(F, chi2, x)
        if x == 0:
            assert v.zero
        else:
            assert v.exponent in (0, (F.q - 1) // 2)
            assert (v.exponent == 0) == (x in squares)
            if k == 1:
                assert (1 if v.exponent == 0 else -1) == legendre(x, p)


def test_reduce_cyclotomic_canonical():
    # 1 + w + ... + w^5 = 0 when w is a primitive 6th root of unity
    assert reduce_cyclotomic([1] * 6, 6) == (0, 0)
    # w^3 = -1
    assert reduce_cyclotomic([0, 0, 0, 1], 6) == (-1, 0)


def test_character_tuples_skip_principal():
    cs = coset_spec(F7, [3, 2])
    tuples = character_tuples(F7, cs, [0, 1])
    assert len(tuples) == (2 - 1) * (3 - 1)
    assert all(not chi.principal for tup in tuples for chi in tup.values())
    assert character_tuples(F7, coset_spec(F7, [6, 3]), [0, 1]) == []
