"""
Tests for projective covers, injective embeddings and endomorphism invariants.
"""

from fractions import Fraction

import pytest

from algebra.envelopes import (
    check_cover_factorization,
    check_embedding_extension,
    embedding_is_faithful,
    end_invariants,
    injective_embedding,
    projective_cover,
)
from algebra.errors import NotComputable
from algebra.picard import hbar, realize
from algebra.types_cat import is_es, l_of, make_type_from_matrix, zero_type
from models.abelian import AbGroup, DivisibleGroup

Z = AbGroup.free(1)


def test_cover_of_z4_over_z2(z2, z4):
    a = make_type_from_matrix(z4, z2, [[1]])
    p, cover = projective_cover(a)
    assert p == Z
    assert cover.source == l_of(Z)
    assert cover.f0.columns == ((1,),)
    assert is_es(cover)


def test_cover_of_trivial_type():
    p, cover = projective_cover(zero_type())
    assert p.is_trivial()
    assert is_es(cover)


def test_cover_has_one_basis_vector_per_generator():
    a = l_of(AbGroup(free_rank=1, torsion=(2,)))
    p, cover = projective_cover(a)
    assert p == AbGroup.free(2)
    assert is_es(cover)


def test_embedding_of_z2_into_z4(z2, z4):
    q, emb = injective_embedding(make_type_from_matrix(z2, z4, [[1]]))
    assert q == DivisibleGroup.from_mapping(0, {2: 1})
    assert emb.f1.images[0].pruefer_part == (Fraction(1, 4),)
    assert embedding_is_faithful(emb)


def test_embedding_of_l_of_z():
    q, emb = injective_embedding(l_of(Z))
    assert q == DivisibleGroup.from_mapping(0, {2: 1})
    assert emb.f1.images[0].pruefer_part == (Fraction(1, 2),)
    assert embedding_is_faithful(emb)


def test_embedding_with_trivial_pi1():
    q, emb = injective_embedding(l_of(AbGroup.cyclic(3)))
    assert q.is_trivial()
    assert embedding_is_faithful(emb)


def test_cover_factorization(small_types):
    for a in small_types:
        report = check_cover_factorization(a, small_types)
        assert report.passed, report.counterexample


def test_embedding_extension(small_types):
    for a in small_types:
        report = check_embedding_extension(a, small_types)
        assert report.passed, report.counterexample
        assert report.problems_tested > 0


def test_end_invariants_of_hbar():
    inv = end_invariants(hbar())
    assert inv.method == "classified"
    assert inv.pi0 == Z
    assert inv.pi0_order is None
    assert inv.pi1 == AbGroup.cyclic(2)


def test_end_invariants_by_brute_force(z2):
    inv = end_invariants(realize(make_type_from_matrix(z2, z2, [[1]])))
    assert inv.method == "brute_force"
    assert inv.pi0_order == 4
    assert inv.pi0 is None
    assert inv.pi1 == z2


def test_end_invariants_of_trivial_model():
    inv = end_invariants(realize(zero_type()))
    assert inv.pi0.is_trivial()
    assert inv.pi0_order == 1
    assert inv.pi1.is_trivial()


def test_end_invariants_not_computable(z4):
    model = realize(make_type_from_matrix(AbGroup(free_rank=1, torsion=(4,)), z4, [[1, 0]]))
    with pytest.raises(NotComputable):
        end_invariants(model)
