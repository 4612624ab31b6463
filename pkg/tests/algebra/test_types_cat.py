"""
Tests for the category TYPES: objects, morphisms, the one-sided objects
l(M) and r(M), and the lifting / extension solvers.
"""

from fractions import Fraction
from itertools import product

import pytest

from algebra.abelian import enumerate_homs, identity_hom, zero_hom
from algebra.divisible import injective_hull
from algebra.errors import (
    AlphaDomainMismatch,
    NotEs,
    NotFaithful,
    SourceNotFree,
    SourceTargetMismatch,
    SquareDoesNotCommute,
)
from algebra.types_cat import (
    adjoint_l,
    adjoint_r,
    adjoint_r_divisible,
    coadjoint_l,
    coadjoint_r,
    compose,
    compose_into_divisible,
    default_catalog,
    enumerate_type_morphisms,
    extend_through_faithful,
    identity_morphism,
    is_es,
    is_faithful,
    l_of,
    lift_through_es,
    make_morphism,
    make_type,
    make_type_from_matrix,
    r_of,
    zero_morphism,
    zero_type,
)
from models.abelian import AbGroup, AbHom, DivHom, DivisibleGroup

Z = AbGroup.free(1)
TRIVIAL = AbGroup.trivial()


@pytest.fixture
def r_z2(z2):
    return make_type_from_matrix(z2, z2, [[1]])


def test_make_type_examples(z2):
    assert make_type_from_matrix(Z, z2, [[1]]) == l_of(Z)
    assert make_type_from_matrix(AbGroup.cyclic(3), AbGroup.cyclic(5), []).alpha.is_zero()
    with pytest.raises(AlphaDomainMismatch):
        make_type_from_matrix(z2, AbGroup.cyclic(3), [[1]])


def test_make_type_rejects_wrong_alpha_domain(z2, z4):
    with pytest.raises(AlphaDomainMismatch):
        make_type(z2, z4, identity_hom(z4))


def test_square_must_commute(r_z2, z2):
    with pytest.raises(SquareDoesNotCommute) as excinfo:
        make_morphism(r_z2, r_z2, identity_hom(z2), zero_hom(z2, z2))
    assert excinfo.value.witness["generator"] == 0
    assert make_morphism(r_z2, r_z2, zero_hom(z2, z2), zero_hom(z2, z2)) == zero_morphism(r_z2, r_z2)
    assert make_morphism(r_z2, r_z2, identity_hom(z2), identity_hom(z2)) == identity_morphism(r_z2)


def test_make_morphism_checks_domains(r_z2, z4):
    with pytest.raises(SourceTargetMismatch):
        make_morphism(r_z2, r_z2, identity_hom(z4), identity_hom(z4))


def test_composition_laws(small_types):
    for a, b in product(small_types, repeat=2):
        for f in enumerate_type_morphisms(a, b):
            assert compose(identity_morphism(b), f) == f
            assert compose(f, identity_morphism(a)) == f


def test_composition_is_associative(small_types):
    a, b, c = small_types[3], small_types[4], small_types[0]
    for f, g, h in product(
        enumerate_type_morphisms(a, b), enumerate_type_morphisms(b, c), enumerate_type_morphisms(c, c)
    ):
        assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_compose_rejects_mismatch(small_types):
    f = identity_morphism(small_types[0])
    g = identity_morphism(small_types[1])
    with pytest.raises(SourceTargetMismatch):
        compose(g, f)


def test_es_examples(z2, z4):
    assert is_es(identity_morphism(l_of(Z)))
    doubling = make_morphism(l_of(Z), l_of(Z), AbHom(Z, Z, ((2,),)), zero_hom(z2, z2))
    assert not is_es(doubling)
    target = make_type_from_matrix(z4, z2, [[1]])
    assert is_es(adjoint_l(Z, target, AbHom(Z, z4, ((1,),))))


def test_faithful_examples(z2, z4):
    assert is_faithful(identity_morphism(r_of(z4)))
    a = make_type_from_matrix(TRIVIAL, z2, [[]])
    b = make_type_from_matrix(TRIVIAL, z4, [[]])
    assert is_faithful(make_morphism(a, b, zero_hom(TRIVIAL, TRIVIAL), AbHom(z2, z4, ((2,),))))
    assert not is_faithful(zero_morphism(a, b))


def test_es_and_faithful_compose(small_types):
    for a, b, c in product(small_types[:3], repeat=3):
        for f, g in product(enumerate_type_morphisms(a, b), enumerate_type_morphisms(b, c)):
            if is_es(f) and is_es(g):
                assert is_es(compose(g, f))
            if is_faithful(f) and is_faithful(g):
                assert is_faithful(compose(g, f))


def test_one_sided_objects(z2):
    assert l_of(Z) == make_type_from_matrix(Z, z2, [[1]])
    assert r_of(z2) == make_type_from_matrix(z2, z2, [[1]])
    assert l_of(AbGroup.cyclic(3)) == make_type(AbGroup.cyclic(3), TRIVIAL, zero_hom(TRIVIAL, TRIVIAL))


def test_enumerate_type_morphism_examples(r_z2):
    assert len(enumerate_type_morphisms(r_z2, r_z2)) == 2
    z3 = l_of(AbGroup.cyclic(3))
    assert len(enumerate_type_morphisms(z3, z3)) == 3
    assert len(enumerate_type_morphisms(r_z2, zero_type())) == 1


@pytest.mark.parametrize("m", [TRIVIAL, AbGroup.cyclic(2), AbGroup.cyclic(4), AbGroup(torsion=(2, 2))])
def test_adjunction_round_trips(m, small_types):
    for a in small_types:
        morphisms = enumerate_type_morphisms(l_of(m), a)
        homs = enumerate_homs(m, a.a0)
        assert len(morphisms) == len(homs)
        for u in homs:
            assert coadjoint_l(adjoint_l(m, a, u)) == u
        for f in morphisms:
            assert adjoint_l(m, a, coadjoint_l(f)) == f

        morphisms = enumerate_type_morphisms(a, r_of(m))
        homs = enumerate_homs(a.a1, m)
        assert len(morphisms) == len(homs)
        for v in homs:
            assert coadjoint_r(adjoint_r(a, m, v)) == v
        for f in morphisms:
            assert adjoint_r(a, m, coadjoint_r(f)) == f


def test_adjoint_l_forces_f1(r_z2, z2):
    f = adjoint_l(Z, r_z2, AbHom(Z, z2, ((1,),)))
    assert f.f1 == identity_hom(z2)
    zero = adjoint_l(Z, r_z2, AbHom(Z, z2, ((0,),)))
    assert zero.f1.is_zero()


def test_adjoint_r_forces_f0(z2, z4):
    """v: Z/2 -> Z/4, 1 -> 2 forces f0 = v alpha on (Z/2, Z/2, id)."""
    a = make_type_from_matrix(z2, z2, [[1]])
    f = adjoint_r(a, z4, AbHom(z2, z4, ((2,),)))
    assert f.target == r_of(z4)
    assert f.f0 == identity_hom(z2)


def test_lift_through_quotient_cover(z2, z4):
    target = make_type_from_matrix(z4, z2, [[1]])
    f = adjoint_l(Z, target, AbHom(Z, z4, ((1,),)))
    g = adjoint_l(Z, target, AbHom(Z, z4, ((3,),)))
    h = lift_through_es(f, g)
    assert compose(f, h) == g
    assert h.f0.columns[0][0] % 4 == 3


def test_lift_trivial_cases(z2):
    a = l_of(Z)
    g = adjoint_l(Z, a, AbHom(Z, Z, ((5,),)))
    assert lift_through_es(identity_morphism(a), g) == g
    zero = zero_morphism(l_of(Z), r_of(z2))
    f = identity_morphism(r_of(z2))
    assert compose(f, lift_through_es(f, zero)) == zero


def test_lift_errors(z2, r_z2):
    with pytest.raises(NotEs):
        lift_through_es(zero_morphism(r_z2, r_z2), zero_morphism(l_of(Z), r_z2))
    with pytest.raises(SourceNotFree):
        lift_through_es(identity_morphism(r_z2), identity_morphism(r_z2))


def test_extend_along_z2_into_z4(z2, z4):
    q = DivisibleGroup.from_mapping(0, {2: 1})
    a = make_type_from_matrix(TRIVIAL, z2, [[]])
    b = make_type_from_matrix(TRIVIAL, z4, [[]])
    f = make_morphism(a, b, zero_hom(TRIVIAL, TRIVIAL), AbHom(z2, z4, ((2,),)))
    g = adjoint_r_divisible(a, q, DivHom(z2, q, (q.element([], [Fraction(1, 2)]),)))
    h = extend_through_faithful(f, g, q)
    assert compose_into_divisible(h, f).key == g.key


def test_extend_trivial_cases(small_types):
    a = small_types[1]
    q, g1 = injective_hull(a.a1)
    g = adjoint_r_divisible(a, q, g1)
    assert extend_through_faithful(identity_morphism(a), g, q).key == g.key
    zero = adjoint_r_divisible(a, q, DivHom(a.a1, q, (q.zero(),) * a.a1.ngens))
    assert extend_through_faithful(identity_morphism(a), zero).key == zero.key


def test_extend_requires_faithful(small_types):
    a = small_types[0]
    q, g1 = injective_hull(a.a1)
    with pytest.raises(NotFaithful):
        extend_through_faithful(zero_morphism(a, a), adjoint_r_divisible(a, q, g1))


def test_default_catalog_is_complete():
    catalog = default_catalog()
    assert len(catalog) == 56
    assert len(set(catalog)) == 56
