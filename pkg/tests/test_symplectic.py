"""Symplectic spaces, similitudes, transvections, subspaces."""

import random

import pytest

from sympal.errors import NotSimilitude, Singular
from sympal.ffield import field_make, mult_generator
from sympal.symplectic import (
    Subspace,
    SympSpace,
    detect_transvection,
    identity_mat,
    is_nonsingular_subspace,
    is_similitude,
    make_transvection,
    mat,
    multiplier_of,
    perp,
    random_similitude,
    random_transvection,
    restricts_to_identity,
    scaling_similitude,
    stabilizes,
    standard_gram,
    TransvectionKind,
)

F5 = field_make(5, 1)
F7 = field_make(7, 1)
F25 = field_make(5, 2)


def sp(spec, n):
    return SympSpace.standard(spec, n)


def test_standard_gram_shape():
    s = sp(F5, 4)
    # <e1, f1> = 1, <f1, e1> = -1, e's mutually orthogonal
    assert s.pair((1, 0, 0, 0), (0, 0, 1, 0)) == 1
    assert s.pair((0, 0, 1, 0), (1, 0, 0, 0)) == 4
    assert s.pair((1, 0, 0, 0), (0, 1, 0, 0)) == 0


def test_gram_must_be_alternating():
    with pytest.raises(ValueError):
        SympSpace(F5, 2, ((1, 0), (0, 1)))


def test_odd_dimension_rejected():
    with pytest.raises(ValueError):
        SympSpace.standard(F5, 3)


def test_basic_transvection_matrix():
    s = sp(F5, 2)
    t = make_transvection(s, (1, 0), 1)
    # u -> u + <u, e1> e1: e1 fixed, f1 -> f1 - e1... sign check by matrix
    assert t.rows == ((1, 4), (0, 1))


def test_transvection_zero_parameter_is_identity():
    s = sp(F5, 2)
    assert make_transvection(s, (1, 0), 0).is_identity()


def test_transvection_additivity():
    s = sp(F7, 4)
    rng = random.Random(3)
    for _ in range(25):
        v = tuple(rng.randrange(7) for _ in range(4))
        if not any(v):
            continue
        lam, mu = rng.randrange(7), rng.randrange(7)
        lhs = make_transvection(s, v, lam) * make_transvection(s, v, mu)
        assert lhs.rows == make_transvection(s, v, (lam + mu) % 7).rows


def test_transvection_det_and_multiplier_one():
    for spec in (F5, F7, F25):
        s = sp(spec, 2)
        rng = random.Random(11)
        for _ in range(20):
            t = random_transvection(s, rng)
            assert t.det() == 1
            assert multiplier_of(t) == 1


def test_detect_round_trip():
    s = sp(F5, 2)
    t = make_transvection(s, (1, 0), 1)
    verdict = detect_transvection(t)
    assert verdict.kind is TransvectionKind.NONTRIVIAL
    rebuilt = make_transvection(s, verdict.data.direction, verdict.data.parameter)
    assert rebuilt.rows == t.rows


def test_detect_canonical_direction():
    s = sp(F5, 2)
    # T_{2v}[lam] = T_v[4 lam]; detector must return leading-one direction
    t = make_transvection(s, (2, 0), 1)
    verdict = detect_transvection(t)
    assert verdict.data.direction == (1, 0)
    assert verdict.data.parameter == 4


def test_detect_rejects_non_transvections():
    s = sp(F5, 2)
    d = mat(s, [[2, 0], [0, 3]])
    assert detect_transvection(d).kind is TransvectionKind.NOT_TRANSVECTION
    assert detect_transvection(identity_mat(s)).kind is TransvectionKind.TRIVIAL


def test_detect_rejects_rank_one_non_symplectic():
    s = sp(F5, 2)
    # I + E_11 has rank(A - I) = 1 but is not symplectic
    a = mat(s, [[2, 0], [0, 1]])
    assert detect_transvection(a).kind is TransvectionKind.NOT_TRANSVECTION


def test_multiplier_of_scaling():
    s = sp(F5, 4)
    a = scaling_similitude(s, 3)
    assert multiplier_of(a) == 3
    assert is_similitude(a)


def test_multiplier_rejects_non_similitudes():
    s = sp(F5, 4)
    bad = mat(s, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    with pytest.raises(NotSimilitude):
        multiplier_of(bad)


def test_multiplier_rejects_singular():
    s = sp(F5, 2)
    with pytest.raises(Singular):
        multiplier_of(mat(s, [[0, 0], [0, 0]]))


def test_conjugation_law():
    """A T_u[lam] A^-1 = T_{Au}[lam / alpha] for similitudes A."""
    for spec in (F5, F25):
        s = sp(spec, 4) if spec is F5 else sp(spec, 2)
        ctx = spec.ctx
        rng = random.Random(5)
        for _ in range(30):
            t = random_transvection(s, rng)
            data = detect_transvection(t).data
            a = random_similitude(s, rng)
            alpha = multiplier_of(a)
            conj = a * t * a.inv()
            expect = make_transvection(
                s, a.apply(data.direction), ctx.mul(data.parameter, ctx.inv(alpha)))
            assert conj.rows == expect.rows


def test_subspace_echelon_equality():
    s = sp(F5, 4)
    w1 = Subspace.from_vectors(s, [(1, 0, 0, 0), (0, 0, 1, 0)])
    w2 = Subspace.from_vectors(s, [(1, 0, 2, 0), (3, 0, 4, 0)])
    assert w1 == w2
    assert w1.dim == 2


def test_perp_dimensions_and_double_perp():
    s = sp(F5, 4)
    rng = random.Random(9)
    for _ in range(20):
        k = rng.randrange(5)
        vecs = [tuple(rng.randrange(5) for _ in range(4)) for _ in range(k)]
        w = Subspace.from_vectors(s, vecs) if vecs else Subspace(s, ())
        wp = perp(w)
        assert w.dim + wp.dim == 4
        assert perp(wp) == w


def test_nonsingular_subspace():
    s = sp(F5, 4)
    hyperbolic = Subspace.from_vectors(s, [(1, 0, 0, 0), (0, 0, 1, 0)])
    isotropic = Subspace.from_vectors(s, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert is_nonsingular_subspace(hyperbolic)
    assert not is_nonsingular_subspace(isotropic)


def test_stabilizes_and_identity_restriction():
    s = sp(F5, 2)
    t = make_transvection(s, (1, 0), 1)
    line = Subspace.from_vectors(s, [(1, 0)])
    assert stabilizes(t, line)
    assert restricts_to_identity(t, line)


def test_lemma_direction_in_w_or_perp():
    """Stabilized W forces the direction into W or W^perp (small exhaustive)."""
    s = sp(F5, 2)
    from itertools import product

    all_vecs = [v for v in product(range(5), repeat=2) if any(v)]
    subspaces = [Subspace(s, ())] + \
        [Subspace.from_vectors(s, [v]) for v in all_vecs] + \
        [Subspace.from_vectors(s, [(1, 0), (0, 1)])]
    for w in {x.basis: x for x in subspaces}.values():
        wp = perp(w)
        for v in all_vecs:
            for lam in range(1, 5):
                t = make_transvection(s, v, lam)
                if stabilizes(t, w):
                    assert w.contains(v) or wp.contains(v)
