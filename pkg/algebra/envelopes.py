"""
Enough projectives and injectives in TYPES, made constructive, and the
additive invariants of endomorphism objects.
"""

import logging
from typing import Sequence, Tuple

from algebra.abelian import hom_group
from algebra.divisible import injective_hull, is_div_mono
from algebra.errors import NotComputable
from algebra.functors import homotopy_classes
from algebra.picard import type_of
from algebra.types_cat import (
    adjoint_l,
    adjoint_r_divisible,
    compose,
    compose_into_divisible,
    enumerate_type_morphisms,
    extend_through_faithful,
    is_es,
    is_faithful,
    l_of,
    lift_through_es,
)
from models.abelian import AbGroup, AbHom, DivisibleGroup
from models.picard import EndInvariants, SkeletalPicard
from models.types import DivTypeMor, FragmentReport, TypeMor, TypeObj

logger = logging.getLogger(__name__)


def projective_cover(a: TypeObj) -> Tuple[AbGroup, TypeMor]:
    """
    An essentially surjective l(P) -> A with P free on the generators of A0.

    Returns:
        Tuple[AbGroup, TypeMor]: P and the cover, f0 sending the i-th basis
        vector to the i-th generator
    """
    n = a.a0.ngens
    p = AbGroup.free(n)
    f0 = AbHom.from_columns(p, a.a0, [[1 if i == j else 0 for i in range(n)] for j in range(n)])
    cover = adjoint_l(p, a, f0)
    logger.debug(f"projective cover of {a}: l({p})")
    return p, cover


def injective_embedding(a: TypeObj) -> Tuple[DivisibleGroup, DivTypeMor]:
    """
    A faithful A -> r(Q) with Q the injective hull of A1.

    Returns:
        Tuple[DivisibleGroup, DivTypeMor]: Q and the embedding, whose second
        component is the hull embedding of A1
    """
    q, g1 = injective_hull(a.a1)
    emb = adjoint_r_divisible(a, q, g1)
    logger.debug(f"injective embedding of {a}: r({q})")
    return q, emb


def embedding_is_faithful(emb: DivTypeMor) -> bool:
    return is_div_mono(emb.f1)


def check_cover_factorization(a: TypeObj, catalog: Sequence[TypeObj]) -> FragmentReport:
    """
    For every essentially surjective f: B -> A out of a catalog type, lift the
    canonical cover of A through f and confirm f h = cover.
    """
    _, cover = projective_cover(a)
    tested = 0
    for b in catalog:
        for f in enumerate_type_morphisms(b, a):
            if not is_es(f):
                continue
            tested += 1
            h = lift_through_es(f, cover)
            if compose(f, h).key != cover.key:
                return FragmentReport(False, tested, {"f": f.to_dict(), "lift": h.to_dict()})
    return FragmentReport(True, tested)


def check_embedding_extension(a: TypeObj, catalog: Sequence[TypeObj]) -> FragmentReport:
    """
    For every faithful f: A -> B into a catalog type, extend the canonical
    embedding of A along f and confirm h f = emb.
    """
    q, emb = injective_embedding(a)
    tested = 0
    for b in catalog:
        for f in enumerate_type_morphisms(a, b):
            if not is_faithful(f):
                continue
            tested += 1
            h = extend_through_faithful(f, emb, q)
            if compose_into_divisible(h, f).key != emb.key:
                return FragmentReport(False, tested, {"f": f.to_dict(), "extension": h.to_dict()})
    return FragmentReport(True, tested)


def end_invariants(model: SkeletalPicard) -> EndInvariants:
    """
    pi_0 and pi_1 of Hom(S, S).

    pi_1 is hom(pi_0 S, pi_1 S). When pi_0 S = P is free and S has type l(P),
    Ext(P, -) vanishes and pi_0 is TYPES(l(P), l(P)) = hom(P, P). Finite models
    get the order of pi_0 from the brute-force homotopy-class count.

    Raises:
        NotComputable: For infinite models of any other shape
    """
    pi1 = hom_group(model.pi0, model.pi1)
    p = model.pi0
    if not p.torsion and type_of(model) == l_of(p):
        pi0 = hom_group(p, p)
        return EndInvariants(pi0, pi0.order(), pi1, "classified")
    if p.is_finite() and model.pi1.is_finite():
        count = homotopy_classes(model, model).count
        pi0 = AbGroup.trivial() if count == 1 else None
        return EndInvariants(pi0, count, pi1, "brute_force")
    raise NotComputable(f"no method for the endomorphisms of a model on {p}, {model.pi1}")
