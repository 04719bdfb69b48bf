"""Weight profiles, niveau characters, n!-power distinctness."""

import math
import random

import pytest

from sympal.errors import InvalidParams, TwistBreaksRegularity
from sympal.regularity import (
    NiveauCharacter,
    WeightProfile,
    characters_equal,
    check_npower_distinct,
    diag_characters,
    part_exponent,
    profile,
    profile_from_doc,
    profile_to_doc,
    random_profile,
    twist_by_cyclotomic,
    validate_profile,
)


def test_validate_good_profile():
    p = profile(7, 2, [(2, [0, 1])])
    assert validate_profile(p) is None
    assert p.max_weight == 1


def test_validate_duplicate_weights():
    bad = WeightProfile(7, 2, ((1, (0,)), (1, (0,))))
    assert "distinct" in validate_profile(bad)


def test_validate_wrong_niveau_sum():
    bad = WeightProfile(5, 3, ((2, (0, 1)),))
    assert "sum" in validate_profile(bad)


def test_validate_weight_range():
    bad = WeightProfile(5, 1, ((1, (7,)),))
    assert "outside" in validate_profile(bad)


def test_part_exponent_base_ell():
    assert part_exponent(7, [0, 1]) == 7       # 0 + 1*7
    assert part_exponent(5, [3]) == 3
    assert part_exponent(7, [2, 3]) == 23      # 2 + 3*7


def test_diag_characters_frobenius_orbit():
    p = profile(7, 2, [(2, [0, 1])])
    chars = diag_characters(p)
    assert [(c.niveau, c.exponent) for c in chars] == [(2, 7), (2, 1)]


def test_diag_characters_orbit_closed_under_ell():
    p = profile(11, 3, [(3, [0, 2, 5])])
    exps = [c.exponent for c in diag_characters(p)]
    mod = 11 ** 3 - 1
    assert sorted((e * 11) % mod for e in exps) == sorted(exps)


def test_characters_equal_reflexive_and_lifting():
    assert characters_equal(NiveauCharacter(2, 5), NiveauCharacter(2, 5), 7)
    # psi_1 = psi_2^(ell + 1)
    assert characters_equal(NiveauCharacter(1, 1), NiveauCharacter(2, 8), 7)
    # Frobenius conjugates are distinct characters
    assert not characters_equal(NiveauCharacter(2, 1), NiveauCharacter(2, 7), 7)


def test_characters_equal_is_equivalence_on_samples():
    rng = random.Random(4)
    chars = [NiveauCharacter(rng.choice([1, 2]), rng.randrange(48))
             for _ in range(12)]
    for a in chars:
        assert characters_equal(a, a, 7)
        for b in chars:
            assert characters_equal(a, b, 7) == characters_equal(b, a, 7)
            for c in chars:
                if characters_equal(a, b, 7) and characters_equal(b, c, 7):
                    assert characters_equal(a, c, 7)


def test_distinct_fixture():
    rep = check_npower_distinct(profile(7, 2, [(2, [0, 1])]))
    assert rep.distinct


def test_collision_fixture():
    # 2!*0 = 0 and 2!*2 = 4 agree mod ell - 1 = 4
    rep = check_npower_distinct(profile(5, 2, [(1, [0]), (1, [2])]))
    assert not rep.distinct
    assert rep.collision == (0, 1)
    assert {c.exponent for c in rep.colliding} == {0, 2}


def test_certificates_bounds():
    rep = check_npower_distinct(profile(7, 2, [(2, [0, 1])]),
                                with_certificates=True)
    assert rep.distinct
    for cert in rep.certificates:
        assert 0 < cert.c0 < cert.bound
    # recompute independently: lifted difference of 2!*7 and 2!*1 in niveau 4
    big = 7 ** 4 - 1
    lift = big // (7 ** 2 - 1)
    c0 = (14 * lift - 2 * lift) % big
    assert min(c0, big - c0) == rep.certificates[0].c0


def test_lemma_guarantee_sweep_small():
    rng = random.Random(0)
    for ell in (7, 11, 13):
        kmax = (ell - 2) // math.factorial(2)
        for _ in range(100):
            p = random_profile(ell, 2, rng, kmax)
            assert p.max_weight <= kmax and ell > p.max_weight * 2 + 1
            assert check_npower_distinct(p).distinct


def test_twist_examples():
    p = profile(7, 2, [(2, [0, 1])])
    assert twist_by_cyclotomic(p, 0) is p
    assert twist_by_cyclotomic(p, 6) is p   # a = ell - 1 acts trivially
    t = twist_by_cyclotomic(p, 2)
    assert t.parts == ((2, (2, 3)),)


def test_twist_collision():
    # weights 0 and 3 collide under shift mod ell - 1 = 3 when ell = 4?  use
    # ell = 7: weights {0, 6} both land on the same residue mod 6
    p = WeightProfile(7, 2, ((2, (0, 6)),))
    assert validate_profile(p) is None
    with pytest.raises(TwistBreaksRegularity):
        twist_by_cyclotomic(p, 1)


def test_profile_doc_round_trip():
    p = profile(11, 3, [(2, [0, 4]), (1, [7])])
    assert profile_from_doc(profile_to_doc(p)) == p


def test_profile_doc_rejects_invalid():
    with pytest.raises(InvalidParams):
        profile_from_doc({"ell": 4, "n": 1, "parts": [{"niveau": 1, "weights": [0]}]})
