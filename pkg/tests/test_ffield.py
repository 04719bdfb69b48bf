"""Finite field arithmetic: construction, tables, dlog, embeddings.

Oracle values (moduli, generators, logs) were computed independently by
brute-force scripts over the integer encodings and frozen here.
"""

import pytest

from sympal.errors import FieldTooLarge, NotGenerator, SpecMismatch, ZeroArgument
from sympal.ffield import (
    FieldElement,
    FieldSpec,
    discrete_log,
    field_make,
    frobenius,
    is_prime,
    mult_generator,
    multiplicative_order,
    subfield_embed,
)


def test_prime_field_basics():
    f5 = field_make(5, 1)
    a = FieldElement(f5, 2)
    b = FieldElement(f5, 4)
    assert (a + b).index == 1
    assert (a * b).index == 3
    assert (a - b).index == 3
    assert (a / b).index == 3   # 2 * 4^-1 = 2 * 4 = 8 = 3
    assert (-a).index == 3


def test_canonical_modulus_f25():
    # lex-least monic irreducible quadratic over F_5, constant term first:
    # x^2 + x + 1 -> (1, 1, 1).  Oracle: exhaustive scan of all 25 candidates.
    f25 = field_make(5, 2)
    assert f25.modulus == (1, 1, 1)
    assert f25.order == 25


def test_canonical_modulus_f49():
    f49 = field_make(7, 2)
    # x^2 + 1 is irreducible over F_7 (-1 is not a square mod 7)
    assert f49.modulus == (1, 0, 1)


def test_field_spec_identity_is_cached():
    assert field_make(5, 2) is field_make(5, 2)


def test_mixed_spec_arithmetic_rejected():
    a = FieldElement(field_make(5, 1), 1)
    b = FieldElement(field_make(7, 1), 1)
    with pytest.raises(SpecMismatch):
        _ = a + b


def test_extension_field_relations():
    f25 = field_make(5, 2)
    ctx = f25.ctx
    x = ctx.encode([0, 1])
    # x^2 = -x - 1 mod (1 + x + x^2)
    assert ctx.mul(x, x) == ctx.encode([4, 4])


def test_generators():
    # oracle: least primitive roots
    assert mult_generator(field_make(5, 1)).index == 2
    assert mult_generator(field_make(7, 1)).index == 3
    g25 = mult_generator(field_make(5, 2))
    ctx = field_make(5, 2).ctx
    # order must be exactly 24
    acc, o = g25.index, 1
    while acc != 1:
        acc = ctx.mul(acc, g25.index)
        o += 1
    assert o == 24


def test_discrete_log_round_trip():
    f25 = field_make(5, 2)
    g = mult_generator(f25)
    ctx = f25.ctx
    for k in (0, 1, 5, 17, 23):
        x = FieldElement(f25, ctx.pow(g.index, k))
        assert discrete_log(x, g) == k


def test_discrete_log_rejects_non_generator():
    f7 = field_make(7, 1)
    with pytest.raises(NotGenerator):
        discrete_log(FieldElement(f7, 3), FieldElement(f7, 2))  # 2 has order 3


def test_discrete_log_of_zero():
    f7 = field_make(7, 1)
    with pytest.raises(ZeroArgument):
        discrete_log(FieldElement(f7, 0), FieldElement(f7, 3))


def test_frobenius_fixes_prime_subfield():
    f25 = field_make(5, 2)
    for c in range(5):
        assert frobenius(FieldElement(f25, c)).index == c
    # frobenius squared is the identity on F_25
    for i in range(25):
        e = FieldElement(f25, i)
        assert frobenius(frobenius(e)) == e


def test_dense_tables_agree_with_ops():
    f25 = field_make(5, 2)
    ctx = f25.ctx
    add, mul, neg, inv = ctx.tables()
    for a in range(25):
        for b in range(25):
            assert add[a][b] == ctx.add(a, b)
            assert mul[a][b] == ctx.mul(a, b)
        assert neg[a] == ctx.neg(a)
        if a:
            assert inv[a] == ctx.inv(a)


def test_subfield_embedding_is_a_ring_map():
    f5 = field_make(5, 1)
    f25 = field_make(5, 2)
    emb = subfield_embed(f5, f25)
    for a in range(5):
        for b in range(5):
            ea = emb(FieldElement(f5, a))
            eb = emb(FieldElement(f5, b))
            assert emb(FieldElement(f5, a) + FieldElement(f5, b)) == ea + eb
            assert emb(FieldElement(f5, a) * FieldElement(f5, b)) == ea * eb


def test_embedding_prime_subfield_is_identity_on_indices():
    f5 = field_make(5, 1)
    f25 = field_make(5, 2)
    emb = subfield_embed(f5, f25)
    # constants encode identically in the canonical encoding
    for a in range(5):
        assert emb(FieldElement(f5, a)).index == a


def test_number_theory_helpers():
    assert is_prime(2) and is_prime(53) and not is_prime(1) and not is_prime(91)
    assert multiplicative_order(5, 3) == 2
    assert multiplicative_order(7, 5) == 4
    assert multiplicative_order(2, 7) == 3


def test_field_too_large_guard():
    with pytest.raises(FieldTooLarge):
        field_make(1009, 2)  # order > 10^6
