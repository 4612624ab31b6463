"""
The category TYPES of triples (A0, A1, alpha).

Provides construction and validation of objects and morphisms, composition,
the essentially-surjective and faithful predicates, the one-sided objects
l(M) and r(M) with their hom-set bijections, and the constructive lifting and
extension solvers for l(P) with P free and r(Q) with Q divisible.
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from algebra.abelian import (
    compose_homs,
    enumerate_homs,
    identity_hom,
    is_epi,
    is_mono,
    lift_from_free,
    two_quotient,
    two_quotient_map,
    two_torsion,
    two_torsion_map,
    zero_hom,
)
from algebra.config import get_settings
from algebra.divisible import compose_div, extend_into_divisible
from algebra.errors import (
    AlphaDomainMismatch,
    InvalidElement,
    NotEs,
    NotFaithful,
    PostconditionFailed,
    SourceNotFree,
    SourceTargetMismatch,
    SquareDoesNotCommute,
)
from models.abelian import AbGroup, AbHom, DivHom, DivisibleGroup
from models.types import DivTypeMor, TypeMor, TypeObj

logger = logging.getLogger(__name__)


def make_type(a0: AbGroup, a1: AbGroup, alpha: AbHom) -> TypeObj:
    """
    Validate and build the triple (a0, a1, alpha).

    Raises:
        AlphaDomainMismatch: If alpha does not map A0/2A0 -> 2-torsion of A1
    """
    return TypeObj(a0, a1, alpha)


def make_type_from_matrix(a0: AbGroup, a1: AbGroup, alpha: Sequence[Sequence[int]]) -> TypeObj:
    """Build a type from a binary alpha matrix (rows: 2A1 coords, cols: A0/2A0 gens)."""
    qa, _ = two_quotient(a0)
    ta, _ = two_torsion(a1)
    rows = tuple(tuple(int(x) for x in row) for row in alpha)
    if len(rows) != ta.ngens or any(len(row) != qa.ngens for row in rows):
        raise AlphaDomainMismatch(
            f"alpha must be a {ta.ngens}x{qa.ngens} matrix for {qa} -> {ta}",
            {"alpha": [list(r) for r in rows]},
        )
    return make_type(a0, a1, AbHom(qa, ta, rows))


def zero_type() -> TypeObj:
    trivial = AbGroup.trivial()
    return make_type(trivial, trivial, zero_hom(trivial, trivial))


def _square_sides(
    src: TypeObj, tgt: TypeObj, f0: AbHom, f1: AbHom
) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, ...], ...]]:
    """Columns of beta after (f0 mod 2) and of (f1 on 2-torsion) after alpha."""
    left = compose_homs(tgt.alpha, two_quotient_map(f0))
    right = compose_homs(two_torsion_map(f1), src.alpha)
    return left.columns, right.columns


def square_defect(src: TypeObj, tgt: TypeObj, f0: AbHom, f1: AbHom) -> Optional[int]:
    """Index of the first A0/2A0 generator where the square fails, or None."""
    left, right = _square_sides(src, tgt, f0, f1)
    for k, (x, y) in enumerate(zip(left, right)):
        if x != y:
            return k
    return None


def make_morphism(src: TypeObj, tgt: TypeObj, f0: AbHom, f1: AbHom) -> TypeMor:
    """
    Validate and build the morphism (f0, f1): src -> tgt.

    Raises:
        SourceTargetMismatch: If f0 or f1 have the wrong domain or codomain
        SquareDoesNotCommute: If beta (f0 mod 2) differs from f1 alpha;
            the witness names the offending generator
    """
    if (f0.source, f0.target) != (src.a0, tgt.a0) or (f1.source, f1.target) != (src.a1, tgt.a1):
        raise SourceTargetMismatch("f0/f1 do not match the source and target types")
    k = square_defect(src, tgt, f0, f1)
    if k is not None:
        left, right = _square_sides(src, tgt, f0, f1)
        raise SquareDoesNotCommute(
            f"square fails on generator {k} of A0/2A0",
            {"generator": k, "beta_f0": list(left[k]), "f1_alpha": list(right[k])},
        )
    return TypeMor(src, tgt, f0, f1)


def identity_morphism(a: TypeObj) -> TypeMor:
    return TypeMor(a, a, identity_hom(a.a0), identity_hom(a.a1))


def zero_morphism(a: TypeObj, b: TypeObj) -> TypeMor:
    return TypeMor(a, b, zero_hom(a.a0, b.a0), zero_hom(a.a1, b.a1))


def compose(g: TypeMor, f: TypeMor) -> TypeMor:
    """
    The composite g after f.

    Raises:
        SourceTargetMismatch: If f's target is not g's source
    """
    if f.target != g.source:
        raise SourceTargetMismatch("morphisms are not composable")
    h = TypeMor(f.source, g.target, compose_homs(g.f0, f.f0), compose_homs(g.f1, f.f1))
    if get_settings().check_results and square_defect(h.source, h.target, h.f0, h.f1) is not None:
        raise PostconditionFailed("composite square does not commute")
    return h


def is_es(f: TypeMor) -> bool:
    """Essentially surjective: f0 is an epimorphism."""
    return is_epi(f.f0)


def is_faithful(f: TypeMor) -> bool:
    """Faithful: f1 is a monomorphism."""
    return is_mono(f.f1)


def l_of(m: AbGroup) -> TypeObj:
    """l(M) = (M, M/2M, id)."""
    q, _ = two_quotient(m)
    return make_type(m, q, identity_hom(q))


def r_of(m: AbGroup) -> TypeObj:
    """r(M) = (2M, M, id)."""
    t, _ = two_torsion(m)
    return make_type(t, m, identity_hom(t))


def _alpha_into_a1(a: TypeObj) -> AbHom:
    """A0 -> A0/2A0 -> 2A1 -> A1."""
    _, proj = two_quotient(a.a0)
    _, inc = two_torsion(a.a1)
    return compose_homs(inc, compose_homs(a.alpha, proj))


def adjoint_l(m: AbGroup, a: TypeObj, u: AbHom) -> TypeMor:
    """
    The morphism l(M) -> A corresponding to u: M -> A0.

    Its second component alpha_A (u mod 2) is forced by the square.
    """
    if (u.source, u.target) != (m, a.a0):
        raise SourceTargetMismatch(f"u must map {m} -> {a.a0}")
    _, inc = two_torsion(a.a1)
    f1 = compose_homs(inc, compose_homs(a.alpha, two_quotient_map(u)))
    return TypeMor(l_of(m), a, u, f1)


def coadjoint_l(f: TypeMor) -> AbHom:
    """The homomorphism M -> A0 underlying a morphism out of l(M)."""
    if f.source != l_of(f.source.a0):
        raise SourceTargetMismatch(f"{f.source} is not of the form l(M)")
    return f.f0


def adjoint_r(a: TypeObj, m: AbGroup, v: AbHom) -> TypeMor:
    """
    The morphism A -> r(M) corresponding to v: A1 -> M.

    Its first component is (v on 2-torsion) alpha composed with A0 -> A0/2A0.
    """
    if (v.source, v.target) != (a.a1, m):
        raise SourceTargetMismatch(f"v must map {a.a1} -> {m}")
    _, proj = two_quotient(a.a0)
    f0 = compose_homs(two_torsion_map(v), compose_homs(a.alpha, proj))
    return TypeMor(a, r_of(m), f0, v)


def coadjoint_r(f: TypeMor) -> AbHom:
    """The homomorphism A1 -> M underlying a morphism into r(M)."""
    if f.target != r_of(f.target.a1):
        raise SourceTargetMismatch(f"{f.target} is not of the form r(M)")
    return f.f1


def make_div_morphism(src: TypeObj, q: DivisibleGroup, f0: DivHom, f1: DivHom) -> DivTypeMor:
    """
    Validate and build a morphism src -> r(Q).

    Raises:
        SquareDoesNotCommute: If f0 leaves the 2-torsion of Q or differs
            from f1 alpha on a generator
    """
    if (f0.source, f0.target, f1.source, f1.target) != (src.a0, q, src.a1, q):
        raise SourceTargetMismatch("f0/f1 do not match the source type and Q")
    forced = compose_div(f1, _alpha_into_a1(src))
    for i, (x, y) in enumerate(zip(f0.images, forced.images)):
        if not q.is_zero(q.scale(2, x)):
            raise InvalidElement(f"f0 image of generator {i} is not 2-torsion", {"generator": i})
        if x != y:
            raise SquareDoesNotCommute(
                f"square fails on generator {i} of A0",
                {"generator": i, "f0": x.to_dict(), "f1_alpha": y.to_dict()},
            )
    return DivTypeMor(src, q, f0, f1)


def adjoint_r_divisible(a: TypeObj, q: DivisibleGroup, v: DivHom) -> DivTypeMor:
    """The morphism A -> r(Q) corresponding to v: A1 -> Q."""
    if (v.source, v.target) != (a.a1, q):
        raise SourceTargetMismatch(f"v must map {a.a1} -> {q}")
    return DivTypeMor(a, q, compose_div(v, _alpha_into_a1(a)), v)


def compose_into_divisible(h: DivTypeMor, f: TypeMor) -> DivTypeMor:
    """The composite h after f, for f: A -> B and h: B -> r(Q)."""
    if f.target != h.source:
        raise SourceTargetMismatch("morphisms are not composable")
    return DivTypeMor(f.source, h.target, compose_div(h.f0, f.f0), compose_div(h.f1, f.f1))


def enumerate_type_morphisms(a: TypeObj, b: TypeObj) -> List[TypeMor]:
    """
    Every morphism A -> B, ordered by f0 then f1.

    Raises:
        InfiniteHomSet: If hom(A0, B0) or hom(A1, B1) is infinite
    """
    f0s = enumerate_homs(a.a0, b.a0)
    f1s = enumerate_homs(a.a1, b.a1)
    by_right: Dict[Tuple, List[AbHom]] = {}
    for f1 in f1s:
        key = compose_homs(two_torsion_map(f1), a.alpha).columns
        by_right.setdefault(key, []).append(f1)
    morphisms = []
    for f0 in f0s:
        key = compose_homs(b.alpha, two_quotient_map(f0)).columns
        for f1 in by_right.get(key, []):
            morphisms.append(TypeMor(a, b, f0, f1))
    logger.debug(f"{len(morphisms)} type morphisms out of {len(f0s) * len(f1s)} candidate pairs")
    return morphisms


def lift_through_es(f: TypeMor, g: TypeMor) -> TypeMor:
    """
    Lift g: l(P) -> B through the essentially surjective f: A -> B.

    Args:
        f: Essentially surjective morphism A -> B
        g: Morphism l(P) -> B with P free

    Returns:
        TypeMor: h: l(P) -> A with f h = g

    Raises:
        NotEs: If f is not essentially surjective
        SourceNotFree: If g's source is not l(P) for a free P
    """
    p = g.source.a0
    if p.torsion or g.source != l_of(p):
        raise SourceNotFree(f"{g.source} is not l(P) for a free P")
    if g.target != f.target:
        raise SourceTargetMismatch("g does not land in the target of f")
    if not is_es(f):
        raise NotEs("f is not essentially surjective")
    h0 = lift_from_free(f.f0, g.f0)
    h = adjoint_l(p, f.source, h0)
    if get_settings().check_results and compose(f, h) != g:
        raise PostconditionFailed("lift does not satisfy f h = g")
    return h


def extend_through_faithful(f: TypeMor, g: DivTypeMor, q: Optional[DivisibleGroup] = None) -> DivTypeMor:
    """
    Extend g: A -> r(Q) along the faithful f: A -> B.

    Args:
        f: Faithful morphism A -> B
        g: Morphism A -> r(Q)
        q: The divisible group Q; defaults to g's target

    Returns:
        DivTypeMor: h: B -> r(Q) with h f = g

    Raises:
        NotFaithful: If f is not faithful
    """
    q = q or g.target
    if g.target != q or g.source != f.source:
        raise SourceTargetMismatch("g must map the source of f into r(Q)")
    if not is_faithful(f):
        raise NotFaithful("f is not faithful")
    h1 = extend_into_divisible(f.f1, g.f1)
    h = adjoint_r_divisible(f.target, q, h1)
    if get_settings().check_results and compose_into_divisible(h, f) != g:
        raise PostconditionFailed("extension does not satisfy h f = g")
    return h


def type_catalog(groups: Sequence[AbGroup]) -> List[TypeObj]:
    """
    Every TypeObj with A0, A1 drawn from ``groups`` and every valid alpha.
    """
    catalog = []
    for a0, a1 in product(groups, repeat=2):
        qa, _ = two_quotient(a0)
        ta, _ = two_torsion(a1)
        for alpha in enumerate_homs(qa, ta):
            catalog.append(make_type(a0, a1, alpha))
    return catalog


DEFAULT_GROUPS: Tuple[AbGroup, ...] = (
    AbGroup.trivial(),
    AbGroup.cyclic(2),
    AbGroup.cyclic(3),
    AbGroup.cyclic(4),
    AbGroup(torsion=(2, 2)),
)


def default_catalog() -> List[TypeObj]:
    return type_catalog(DEFAULT_GROUPS)
