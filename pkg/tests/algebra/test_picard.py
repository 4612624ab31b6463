"""
Tests for skeletal models: realization, reading the type back, coherence,
and the free model on one object.
"""

import pytest

from algebra.errors import IncoherentModel, InvalidElement
from algebra.picard import (
    coherence_check,
    generator_samples,
    hbar,
    hbar_literal,
    realize,
    sample_elements,
    type_of,
)
from algebra.types_cat import default_catalog, l_of, make_type_from_matrix
from models.abelian import AbGroup
from models.picard import Cochain, CochainKind, SkeletalPicard

Z = AbGroup.free(1)


def test_realize_l_of_z():
    model = realize(l_of(Z))
    assert model.pi0 == Z and model.pi1 == AbGroup.cyclic(2)
    assert model.sym.kind == CochainKind.BILINEAR
    assert model.c((3,), (5,)) == (1,)
    assert model.c((2,), (3,)) == (0,)


def test_realize_zero_alpha():
    model = realize(make_type_from_matrix(AbGroup.cyclic(3), AbGroup.cyclic(5), []))
    assert model.sym.table == ()
    assert all(model.c(x, y) == (0,) for x in model.pi0.elements() for y in model.pi0.elements())


def test_realize_r_of_z2(z2):
    model = realize(make_type_from_matrix(z2, z2, [[1]]))
    assert model.c((1,), (1,)) == (1,)
    assert coherence_check(model).passed


def test_realized_symmetry_is_diagonal(v4):
    """On (V, V, id) the symmetry is c(x, y) = (x1 y1, x2 y2)."""
    model = realize(make_type_from_matrix(v4, v4, [[1, 0], [0, 1]]))
    for x in v4.elements():
        for y in v4.elements():
            assert model.c(x, y) == ((x[0] * y[0]) % 2, (x[1] * y[1]) % 2)


def test_round_trip_over_default_catalog():
    for a in default_catalog():
        model = realize(a)
        assert coherence_check(model).passed
        assert type_of(model) == a


def test_round_trip_with_free_pi0(z2, z4):
    a = make_type_from_matrix(AbGroup(free_rank=1, torsion=(4,)), z4, [[1, 0]])
    assert type_of(realize(a), window=4) == a


def test_hbar_values():
    h = hbar()
    assert h.c((1,), (1,)) == (1,)
    for m in range(-6, 7):
        assert h.c((2,), (m,)) == (0,)
        for n in range(-6, 7):
            assert h.c((n,), (m,)) == h.c((m,), (n,))


def test_hbar_is_coherent():
    report = coherence_check(hbar(), 16)
    assert report.passed
    assert report.window == 16
    assert report.checked == 33 * 3 ** 2
    assert "pentagon" in dict(report.notes)


def test_literal_reading_fails_at_1_1_1():
    report = coherence_check(hbar_literal(), 16)
    assert not report.passed
    assert report.witness("biadditivity") == ((1,), (1,), (1,))
    assert report.witness("symmetry") is None
    assert report.checked == 33 ** 3


def test_zero_symmetry_is_coherent(v4):
    model = SkeletalPicard(v4, v4, Cochain.zero_table(v4))
    assert coherence_check(model).passed
    assert type_of(model).alpha.is_zero()


def test_type_of_hbar():
    assert type_of(hbar()) == l_of(Z)


def test_type_of_rejects_non_two_torsion(z2, z4):
    model = SkeletalPicard(z2, z4, Cochain(CochainKind.TABLE, z4, table=(((1,), (1,), (1,)),)))
    with pytest.raises(IncoherentModel):
        type_of(model)


def test_type_of_rejects_non_quadratic(z2, z4):
    """q(1) = 1 but q(3) = 0 on Z/4, so q does not factor through Z/4 / 2."""
    model = SkeletalPicard(z4, z2, Cochain(CochainKind.TABLE, z2, table=(((1,), (1,), (1,)),)))
    with pytest.raises(IncoherentModel) as excinfo:
        type_of(model)
    assert excinfo.value.witness["element"] == [3]
    assert not coherence_check(model).passed


def test_sample_elements_needs_window():
    with pytest.raises(InvalidElement):
        list(sample_elements(Z))
    assert list(sample_elements(Z, 2)) == [(0,), (1,), (-1,), (2,), (-2,)]


def test_generator_samples():
    assert generator_samples(Z) == [(0,), (1,), (-1,)]
    assert generator_samples(AbGroup(free_rank=1, torsion=(2,))) == [(0, 0), (1, 0), (-1, 0), (0, 1)]
    assert generator_samples(AbGroup.cyclic(3)) == [(0,), (1,), (2,)]


def test_rank_two_coherence_is_linear_in_the_window():
    report = coherence_check(realize(l_of(AbGroup.free(2))))
    assert report.passed
    assert report.window == 16
    assert report.checked == 33 ** 2 * 5 ** 2


def test_bilinear_form_ignoring_torsion_is_caught(z2):
    """c(x, y) = x1 y2 + x2 y1 on Z + Z/3 is not well defined: 3 e2 = 0 but c(e1, 3 e2) = 1."""
    g = AbGroup(free_rank=1, torsion=(3,))
    form = (((0,), (1,)), ((1,), (0,)))
    report = coherence_check(SkeletalPicard(g, z2, Cochain(CochainKind.BILINEAR, z2, form=form)), 4)
    assert not report.passed
    assert report.witness("biadditivity") == ((1, 0), (0, 1), (0, 2))
    assert report.witness("symmetry") is None
