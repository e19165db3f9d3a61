"""Morphisms, witnessed automorphisms, semilinear maps, kernels, files."""

import random

import pytest

from freeassoc import (
    AutWitness,
    FreeAlgebra,
    Morphism,
    SemilinearMap,
    conjugate_morphism,
    dump_morphism,
    dump_semilinear,
    in_commutator_ideal,
    iter_univariate_morphisms,
    kernel_probe,
    kernel_probe_exhaustive,
    load_morphism,
    load_semilinear,
    parse_poly,
)
from freeassoc.errors import (
    AlgebraMismatchError,
    ArityMismatchError,
    FileFormatError,
    WitnessError,
)
from freeassoc.morphisms import invert_matrix
from freeassoc.sampling import random_aut, random_morphism, random_poly, random_semilinear

from conftest import F2, F4, F5, QQ


def P(text, algebra):
    return parse_poly(text, algebra)


# ---------------------------------------------------------------------------
# substitution and composition
# ---------------------------------------------------------------------------

def test_apply_substitutes(A2):
    s = Morphism(A2, A2, [P("x*y", A2), P("x", A2)])
    assert s(P("x*y - y*x", A2)) == P("x*y*x - x*x*y", A2)


def test_identity_applies_trivially(A2, rng):
    ident = Morphism.identity(A2)
    for _ in range(20):
        p = random_poly(A2, rng, max_deg=4)
        assert ident(p) == p


def test_apply_into_univariate(A1, A2):
    s = Morphism(A2, A1, [P("t", A1), P("t^2", A1)])
    assert s(P("x*y + y*x", A2)) == P("2*t^3", A1)


def test_apply_is_unital_ring_homomorphism(A2, rng):
    for _ in range(100):
        s = random_morphism(A2, A2, rng, max_deg=2)
        p = random_poly(A2, rng, max_deg=2, max_terms=3)
        q = random_poly(A2, rng, max_deg=2, max_terms=3)
        assert s(p * q) == s(p) * s(q)
        assert s(p + q) == s(p) + s(q)
        assert s(A2.one()) == A2.one()


def test_compose_identity_laws(A2, rng):
    ident = Morphism.identity(A2)
    s = random_morphism(A2, A2, rng)
    assert ident.compose(s) == s
    assert s.compose(ident) == s


def test_compose_through_univariate(A1, A2):
    s = Morphism(A1, A2, [P("x*y + y*x", A2)])
    r = Morphism(A2, A1, [P("t", A1), P("t^2", A1)])
    composed = r.compose(s)
    assert composed.images == (P("2*t^3", A1),)


def test_compose_associative(rng):
    algebras = [FreeAlgebra(QQ, n) for n in (1, 2, 3)]
    for _ in range(50):
        a, b, c, d = (algebras[rng.randrange(3)] for _ in range(4))
        s = random_morphism(a, b, rng)
        t = random_morphism(b, c, rng)
        u = random_morphism(c, d, rng)
        assert u.compose(t.compose(s)) == u.compose(t).compose(s)


def test_compose_arity_mismatch(A1, A2):
    s = Morphism(A1, A2, [P("x", A2)])
    with pytest.raises(ArityMismatchError):
        s.compose(s)


def test_apply_wrong_algebra(A1, A2):
    s = Morphism.identity(A2)
    with pytest.raises(AlgebraMismatchError):
        s(P("t", A1))


# ---------------------------------------------------------------------------
# witnessed automorphisms
# ---------------------------------------------------------------------------

def test_witness_rejects_non_inverse(A2):
    fwd = Morphism(A2, A2, [P("x + y*y", A2), P("y", A2)])
    bad_inv = Morphism(A2, A2, [P("x - y", A2), P("y", A2)])
    with pytest.raises(WitnessError):
        AutWitness(fwd, bad_inv)


def test_elementary_witness(A2):
    eta = AutWitness.elementary(A2, 1, P("y*y", A2))
    assert eta.fwd(P("x", A2)) == P("x + y*y", A2)
    assert eta.inv(eta.fwd(P("x*y", A2))) == P("x*y", A2)
    with pytest.raises(WitnessError):
        AutWitness.elementary(A2, 1, P("x*y", A2))


def test_affine_witness(A2):
    eta = AutWitness.affine(A2, [[1, 1], [0, 1]], [2, 0])
    assert eta.fwd(P("x", A2)) == P("x + y + 2", A2)
    p = P("x*y - y*x", A2)
    assert eta.inv(eta.fwd(p)) == p
    with pytest.raises(WitnessError):
        AutWitness.affine(A2, [[1, 1], [1, 1]])


def test_affine_witness_finite_field():
    algebra = FreeAlgebra(F5, 2)
    eta = AutWitness.affine(algebra, [[2, 1], [3, 3]], [1, 2])
    p = parse_poly("x*x*y + 3*y", algebra)
    assert eta.inv(eta.fwd(p)) == p


def test_witness_composition(A2, rng):
    for _ in range(20):
        a = random_aut(A2, rng)
        b = random_aut(A2, rng)
        ab = a.compose(b)
        p = random_poly(A2, rng, max_deg=2)
        assert ab.fwd(p) == a.fwd(b.fwd(p))
        assert ab.inv(ab.fwd(p)) == p


def test_mirror_conjugate_is_witnessed(A2, rng):
    # conjugating any automorphism by word reversal stays an automorphism
    for _ in range(50):
        eta = random_aut(A2, rng)
        conj = eta.mirror_conjugate()  # construction re-verifies the witness
        p = random_poly(A2, rng, max_deg=3)
        assert conj.fwd(p) == eta.fwd(p.mirror()).mirror()
        assert conj.inv(conj.fwd(p)) == p


def test_invert_matrix():
    inv = invert_matrix(QQ, [[QQ.from_int(2), QQ.from_int(1)], [QQ.from_int(1), QQ.from_int(1)]])
    assert inv[0][0] == QQ.from_int(1)
    assert inv[0][1] == QQ.from_int(-1)
    singular = invert_matrix(F2, [[F2.one(), F2.one()], [F2.one(), F2.one()]])
    assert singular is None


# ---------------------------------------------------------------------------
# semilinear maps
# ---------------------------------------------------------------------------

def test_semilinear_pure_mirror(A2):
    beta = SemilinearMap.mirror_map(A2)
    assert beta(P("x*y + 2*x*x*y", A2)) == P("y*x + 2*y*x*x", A2)


def test_semilinear_with_eta(A2):
    eta = AutWitness.elementary(A2, 1, P("y*y", A2))
    mu = SemilinearMap(A2, QQ.identity_aut(), False, eta)
    assert mu(P("x*y", A2)) == P("x*y + y*y*y", A2)


def test_semilinear_coefficient_action():
    algebra = FreeAlgebra(F4, 2)
    mu = SemilinearMap(algebra, F4.frobenius(1), False, AutWitness.identity(algebra))
    p = algebra.from_word((1,), F4.from_coeffs((0, 1)))  # w * x
    assert mu(p) == algebra.from_word((1,), F4.from_coeffs((1, 1)))  # (w+1) * x


def test_inverse_of_pure_mirror(A2):
    beta = SemilinearMap.mirror_map(A2)
    inv = beta.inverse()
    assert inv.mirror_flag
    assert inv.eta.fwd == Morphism.identity(A2)


def test_inverse_of_elementary(A2):
    eta = AutWitness.elementary(A2, 1, P("y*y", A2))
    mu = SemilinearMap(A2, QQ.identity_aut(), False, eta)
    inv = mu.inverse()
    assert inv.eta.fwd.images[0] == P("x - y*y", A2)


def test_semilinear_round_trip_randomized():
    # 200 random composites, each undone exactly by the computed inverse
    fields = [(QQ, [QQ.identity_aut()]), (F4, [F4.identity_aut(), F4.frobenius(1)])]
    rng = random.Random(17)
    for field, alphas in fields:
        algebra = FreeAlgebra(field, 2)
        for _ in range(100):
            mu = random_semilinear(algebra, rng, alphas=alphas)
            inv = mu.inverse()
            p = random_poly(algebra, rng, max_deg=3, max_terms=3)
            assert inv(mu(p)) == p
            assert mu(inv(p)) == p


def test_semilinear_additive_and_twisted(A2, rng):
    eta = random_aut(A2, rng)
    mu = SemilinearMap(A2, QQ.identity_aut(), True, eta)
    for _ in range(50):
        p = random_poly(A2, rng, max_deg=3)
        q = random_poly(A2, rng, max_deg=3)
        assert mu(p + q) == mu(p) + mu(q)


def test_mirror_flag_maps_factor_through_reversal(A2, rng):
    # any mirror-flagged map becomes multiplicative after one more reversal
    for _ in range(50):
        eta = random_aut(A2, rng)
        mu = SemilinearMap(A2, QQ.identity_aut(), True, eta)
        p = random_poly(A2, rng, max_deg=2, max_terms=3)
        q = random_poly(A2, rng, max_deg=2, max_terms=3)
        composed = lambda v: mu(v.mirror())
        assert composed(p * q) == composed(p) * composed(q)


# ---------------------------------------------------------------------------
# conjugation
# ---------------------------------------------------------------------------

def test_conjugate_by_mirror(A2):
    s = Morphism(A2, A2, [P("x*y", A2), P("x", A2)])
    beta = SemilinearMap.mirror_map(A2)
    conj = conjugate_morphism(s, beta, beta)
    assert list(conj.images) == [P("y*x", A2), P("x", A2)]
    assert conj.is_plain_morphism()
    m = conj.as_morphism()
    assert m(P("x*y", A2)) == conj(P("x*y", A2))


def test_conjugate_by_identity(A2, rng):
    ident = SemilinearMap.identity(A2)
    s = random_morphism(A2, A2, rng)
    conj = conjugate_morphism(s, ident, ident)
    assert conj.images == s.images


def test_conjugate_with_mismatched_flags_factors_through_reversal(A2, rng):
    # mirror on one side only: the conjugate is not a morphism, but
    # precomposing with word reversal makes it one
    for _ in range(20):
        s = random_morphism(A2, A2, rng, max_deg=2, max_terms=2)
        conj = conjugate_morphism(s, SemilinearMap.mirror_map(A2), SemilinearMap.identity(A2))
        assert not conj.is_plain_morphism()
        m = Morphism(A2, A2, conj.images)
        p = random_poly(A2, rng, max_deg=2, max_terms=2)
        q = random_poly(A2, rng, max_deg=2, max_terms=2)
        assert m(p) == conj(p.mirror())
        assert m(p * q) == conj((p * q).mirror())


def test_conjugation_functorial(rng):
    # (s . t) conjugated = (s conjugated) . (t conjugated), 100 random pairs;
    # single-layer inner automorphisms keep composite images from exploding
    algebras = {n: FreeAlgebra(QQ, n) for n in (1, 2, 3)}
    family = {n: random_semilinear(algebras[n], rng, layers=1) for n in algebras}
    for _ in range(100):
        i, j, k = (rng.choice([1, 2, 3]) for _ in range(3))
        t = random_morphism(algebras[k], algebras[i], rng, max_deg=2, max_terms=2)
        s = random_morphism(algebras[i], algebras[j], rng, max_deg=2, max_terms=2)
        lhs = conjugate_morphism(s.compose(t), family[k], family[j]).images
        ms = Morphism(algebras[i], algebras[j], conjugate_morphism(s, family[i], family[j]).images)
        mt = Morphism(algebras[k], algebras[i], conjugate_morphism(t, family[k], family[i]).images)
        assert lhs == ms.compose(mt).images


# ---------------------------------------------------------------------------
# commutator ideal membership
# ---------------------------------------------------------------------------

def test_commutator_generator_is_member(A2):
    assert in_commutator_ideal(P("x*y - y*x", A2))


def test_linear_poly_not_member(A2):
    assert not in_commutator_ideal(P("x + y", A2))


def test_conjugated_commutator_is_member(A2):
    # expand x(xy - yx) - (xy - yx)x by hand: xxy - 2xyx + yxx... with signs:
    # x*xy - x*yx - xy*x + yx*x = xxy - xyx - xyx + yxx
    expanded = P("x*x*y - 2*x*y*x + y*x*x", A2)
    x = P("x", A2)
    comm = P("x*y - y*x", A2)
    assert x * comm - comm * x == expanded
    assert in_commutator_ideal(expanded)


def test_membership_is_two_sided_ideal(A2, rng):
    comm = P("x*y - y*x", A2)
    for _ in range(100):
        left = random_poly(A2, rng, max_deg=2)
        right = random_poly(A2, rng, max_deg=2)
        assert in_commutator_ideal(left * comm * right)


# ---------------------------------------------------------------------------
# kernel probes
# ---------------------------------------------------------------------------

def test_probe_commutator_always_killed(A2):
    comm = P("x*y - y*x", A2)
    for trials, deg in [(5, 1), (20, 2), (40, 3)]:
        assert kernel_probe(comm, trials, deg, seed=1).all_killed


def test_probe_finds_witness(A2):
    res = kernel_probe(P("x*y + y*x", A2), 20, 1, seed=0)
    assert not res.all_killed
    assert not res.witness_image.is_zero()
    assert res.witness(P("x*y + y*x", A2)) == res.witness_image


def test_probe_consistent_with_membership(A2):
    rng = random.Random(23)
    for _ in range(100):
        p = random_poly(A2, rng, max_deg=3, max_terms=4)
        if p.abelianize().is_zero():
            assert kernel_probe(p, 50, 3, seed=rng.randrange(10**6)).all_killed
        else:
            assert not kernel_probe(p, 50, 3, seed=rng.randrange(10**6)).all_killed


def test_probe_rejects_tiny_fields():
    algebra = FreeAlgebra(F2, 2)
    with pytest.raises(ValueError):
        kernel_probe(parse_poly("x*y", algebra), 10, 3)


def test_probe_zero_poly(A2):
    assert kernel_probe(A2.zero(), 10, 2).all_killed


def test_exhaustive_probe_gf2():
    algebra = FreeAlgebra(F2, 2)
    morphisms = list(iter_univariate_morphisms(algebra, 3))
    assert len(morphisms) == 256
    assert kernel_probe_exhaustive(parse_poly("x*y - y*x", algebra), 3, morphisms).all_killed
    res = kernel_probe_exhaustive(parse_poly("x + y", algebra), 3, morphisms)
    assert not res.all_killed


# ---------------------------------------------------------------------------
# file round trips
# ---------------------------------------------------------------------------

def test_morphism_file_round_trip(A1, A2, rng):
    s = random_morphism(A2, A1, rng, max_deg=3)
    assert load_morphism(dump_morphism(s)) == s


def test_morphism_file_examples():
    text = "field Q\ndom 2\ncod 1\nx1 -> t\nx2 -> t^2\n"
    s = load_morphism(text)
    assert s.dom.arity == 2 and s.cod.arity == 1
    assert s(parse_poly("x*y + y*x", s.dom)) == parse_poly("2*t^3", s.cod)


def test_morphism_file_rejects_incomplete():
    with pytest.raises(FileFormatError):
        load_morphism("field Q\ndom 2\ncod 1\nx1 -> t\n")
    with pytest.raises(FileFormatError):
        load_morphism("field Q\ndom 1\ncod 1\nx1 -> t\nx1 -> t^2\n")
    with pytest.raises(FileFormatError):
        load_morphism("dom 1\ncod 1\nx1 -> t\n")
    with pytest.raises(FileFormatError):
        load_morphism("field Q\ndom 1\ncod 1\nmirror 0\nx1 -> t\n")


def test_semilinear_file_round_trip(rng):
    algebra = FreeAlgebra(F4, 2)
    mu = random_semilinear(algebra, rng, alphas=[F4.identity_aut(), F4.frobenius(1)])
    loaded = load_semilinear(dump_semilinear(mu))
    assert loaded.alpha == mu.alpha
    assert loaded.mirror_flag == mu.mirror_flag
    assert loaded.eta.fwd == mu.eta.fwd
    p = random_poly(algebra, rng, max_deg=3)
    assert loaded(p) == mu(p)


def test_semilinear_file_requires_inverse(A2):
    text = "field Q\ndom 2\ncod 2\nalpha frob^0\nmirror 1\nx1 -> x\nx2 -> y\n"
    with pytest.raises(FileFormatError):
        load_semilinear(text)


def test_semilinear_file_checks_witness():
    text = (
        "field Q\ndom 2\ncod 2\nalpha frob^0\nmirror 0\n"
        "x1 -> x + y*y\nx2 -> y\ninverse:\nx1 -> x - y\nx2 -> y\n"
    )
    with pytest.raises(WitnessError):
        load_semilinear(text)
