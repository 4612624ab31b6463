"""
Tests for finitely generated abelian groups: canonical forms, hom and Ext,
the mod-2 constructions, and the solvers.
"""

from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.abelian import (
    canonical_form,
    cokernel,
    compose_homs,
    enumerate_homs,
    ext_group,
    hom_group,
    hom_order,
    is_epi,
    is_mono,
    kernel,
    lift_from_free,
    two_quotient,
    two_torsion,
)
from algebra.errors import IllDefinedHom, InfiniteHomSet, InvalidElement, NotEpi, SourceNotFree
from algebra.types_cat import DEFAULT_GROUPS
from models.abelian import AbGroup, AbHom

Z = AbGroup.free(1)


def test_canonical_form_examples():
    assert canonical_form([[2, 0]], 2)[0] == AbGroup(free_rank=1, torsion=(2,))
    assert canonical_form([], 2)[0] == AbGroup.free(2)
    assert canonical_form([[4, 0], [2, 2]], 2)[0] == AbGroup(torsion=(2, 4))


def test_projection_is_epi():
    group, projection = canonical_form([[4, 0], [2, 2]], 2)
    assert projection.target == group
    assert is_epi(projection)


@settings(max_examples=50, deadline=None)
@given(st.permutations([0, 1, 2]), st.permutations([0, 1, 2]))
def test_canonical_form_ignores_presentation_order(row_order, col_order):
    relations = [[2, 4, 0], [0, 6, 3], [4, 0, 0]]
    shuffled = [[relations[i][j] for j in col_order] for i in row_order]
    assert canonical_form(shuffled, 3)[0] == canonical_form(relations, 3)[0]


def test_invalid_torsion_chain():
    with pytest.raises(InvalidElement):
        AbGroup(torsion=(4, 2))


def test_ill_defined_matrix():
    """Z/2 -> Z/3 cannot send the generator to 1."""
    with pytest.raises(IllDefinedHom):
        AbHom(AbGroup.cyclic(2), AbGroup.cyclic(3), ((1,),))


def test_hom_examples():
    assert hom_group(AbGroup.cyclic(4), AbGroup.cyclic(6)) == AbGroup.cyclic(2)
    assert hom_group(Z, AbGroup(free_rank=1, torsion=(2, 4))) == AbGroup(free_rank=1, torsion=(2, 4))
    assert hom_group(AbGroup.cyclic(2), AbGroup.cyclic(3)).is_trivial()


def test_ext_examples():
    assert ext_group(AbGroup.cyclic(2), AbGroup.cyclic(2)) == AbGroup.cyclic(2)
    assert ext_group(AbGroup.cyclic(2), AbGroup.cyclic(3)).is_trivial()
    for b in DEFAULT_GROUPS + (Z,):
        assert ext_group(Z, b).is_trivial()


@pytest.mark.parametrize("m,n", [(2, 2), (2, 4), (4, 6), (3, 9), (5, 7), (12, 18)])
def test_ext_of_cyclic_groups(m, n):
    assert ext_group(AbGroup.cyclic(m), AbGroup.cyclic(n)) == AbGroup.cyclic(gcd(m, n))


@pytest.mark.parametrize("a,b", list(product(DEFAULT_GROUPS, repeat=2)))
def test_hom_order_matches_enumeration(a, b):
    homs = enumerate_homs(a, b)
    assert len(homs) == hom_order(a, b)
    assert len(set(h.matrix for h in homs)) == len(homs)


def test_enumerate_homs_examples():
    assert len(enumerate_homs(AbGroup.cyclic(2), AbGroup.cyclic(2))) == 2
    assert len(enumerate_homs(AbGroup.cyclic(4), AbGroup.cyclic(6))) == 2
    assert hom_order(Z, AbGroup.cyclic(2)) == 2
    assert hom_order(Z, Z) is None
    with pytest.raises(InfiniteHomSet):
        enumerate_homs(Z, Z)


def test_two_torsion_examples():
    sub, inc = two_torsion(AbGroup.cyclic(4))
    assert sub == AbGroup.cyclic(2)
    assert inc.columns == ((2,),)
    assert two_torsion(Z)[0].is_trivial()
    assert two_torsion(AbGroup.from_orders(0, [2, 3, 4]))[0] == AbGroup(torsion=(2, 2))


def test_two_quotient_examples():
    assert two_quotient(Z)[0] == AbGroup.cyclic(2)
    assert two_quotient(AbGroup.cyclic(3))[0].is_trivial()
    assert two_quotient(AbGroup(free_rank=1, torsion=(4,)))[0] == AbGroup(torsion=(2, 2))


@pytest.mark.parametrize("a", DEFAULT_GROUPS + (AbGroup.from_orders(0, [2, 4, 6]),))
def test_two_torsion_and_quotient_have_equal_order(a):
    assert two_torsion(a)[0].order() == two_quotient(a)[0].order()
    assert sum(1 for x in a.elements() if a.is_zero(a.scale(2, x))) == two_torsion(a)[0].order()


def test_epi_mono_examples():
    double = AbHom(Z, Z, ((2,),))
    assert not is_epi(double) and is_mono(double)
    quotient = AbHom(Z, AbGroup.cyclic(2), ((1,),))
    assert is_epi(quotient) and not is_mono(quotient)
    zero = AbHom(AbGroup.cyclic(2), AbGroup.cyclic(2), ((0,),))
    assert not is_epi(zero) and not is_mono(zero)


def test_kernel_and_cokernel():
    assert cokernel(AbHom(Z, Z, ((2,),)))[0] == AbGroup.cyclic(2)
    k, inc = kernel(AbHom(Z, AbGroup.cyclic(2), ((1,),)))
    assert k == Z
    assert inc.columns in (((2,),), ((-2,),))
    k, _ = kernel(AbHom(AbGroup.cyclic(4), AbGroup.cyclic(2), ((1,),)))
    assert k == AbGroup.cyclic(2)


def test_lift_through_quotient():
    """A lift of 1 -> 3 through Z -> Z/4 sends 1 to something congruent to 3."""
    z4 = AbGroup.cyclic(4)
    f = AbHom(Z, z4, ((1,),))
    g = AbHom(Z, z4, ((3,),))
    h = lift_from_free(f, g)
    assert compose_homs(f, h) == g
    assert h.columns[0][0] % 4 == 3
    zero = AbHom(Z, z4, ((0,),))
    assert compose_homs(f, lift_from_free(f, zero)) == zero


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 5), st.integers(0, 5))
def test_lift_onto_z6(a, b):
    """Z^2 -> Z/2 + Z/3 (= Z/6) sending the basis to 3 and 2; any g lifts."""
    z2, z6 = AbGroup.free(2), AbGroup.cyclic(6)
    f = AbHom(z2, z6, ((3, 2),))
    g = AbHom(z2, z6, ((a, b),))
    assert compose_homs(f, lift_from_free(f, g)) == g


def test_lift_errors():
    with pytest.raises(NotEpi):
        lift_from_free(AbHom(Z, Z, ((2,),)), AbHom(Z, Z, ((1,),)))
    z2 = AbGroup.cyclic(2)
    with pytest.raises(SourceNotFree):
        lift_from_free(AbHom(z2, z2, ((1,),)), AbHom(z2, z2, ((1,),)))
