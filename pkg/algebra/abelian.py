"""
Operations on finitely generated abelian groups.

Everything reduces to Smith normal form: canonical forms of presentations,
cokernels and kernels of homomorphisms, and integer solutions of f(x) = b.
Hom and Ext are computed summand by summand from the invariant factors.
"""

import logging
from itertools import product
from math import gcd
from typing import List, Optional, Sequence, Tuple

from algebra.config import get_settings
from algebra.errors import (
    InfiniteHomSet,
    InvalidElement,
    NotEpi,
    PostconditionFailed,
    SourceNotFree,
    SourceTargetMismatch,
)
from algebra.snf import diagonal, integer_kernel, smith_normal_form, solve_integer_system, transpose
from models.abelian import AbGroup, AbHom, GroupElement

logger = logging.getLogger(__name__)


def canonical_form(relations: Sequence[Sequence[int]], generators: int) -> Tuple[AbGroup, AbHom]:
    """
    Invariant-factor form of the group <x1..xn | relations>.

    Args:
        relations: One row per relation, one column per generator
        generators: Number of generators n

    Returns:
        Tuple[AbGroup, AbHom]: The cokernel group and the projection from Z^n
    """
    for row in relations:
        if len(row) != generators:
            raise InvalidElement(f"relation {list(row)} does not have {generators} entries")
    _, d, v = smith_normal_form(relations, cols=generators)
    diag = diagonal(d) if relations else []
    diag = diag + [0] * (generators - len(diag))
    vt = transpose(v, cols=generators)

    free_rows = [vt[i] for i in range(generators) if diag[i] == 0]
    torsion_idx = [i for i in range(generators) if diag[i] >= 2]
    group = AbGroup(free_rank=len(free_rows), torsion=tuple(diag[i] for i in torsion_idx))
    projection = AbHom(AbGroup.free(generators), group, tuple(map(tuple, free_rows + [vt[i] for i in torsion_idx])))
    return group, projection


def identity_hom(group: AbGroup) -> AbHom:
    n = group.ngens
    return AbHom(group, group, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def zero_hom(source: AbGroup, target: AbGroup) -> AbHom:
    return AbHom(source, target, tuple((0,) * source.ngens for _ in range(target.ngens)))


def compose_homs(g: AbHom, f: AbHom) -> AbHom:
    """
    The composite g after f.

    Raises:
        SourceTargetMismatch: If f's target is not g's source
    """
    if f.target != g.source:
        raise SourceTargetMismatch(f"cannot compose {g.source} <- {f.target}")
    return AbHom.from_columns(f.source, g.target, [g.apply(col) for col in f.columns])


def hom_group(a: AbGroup, b: AbGroup) -> AbGroup:
    """
    hom(A, B) from the invariant factors: hom(Z, B) = B and
    hom(Z/d, B) = d-torsion of B, summed over the summands of A.
    """
    free = a.free_rank * b.free_rank
    orders: List[int] = []
    for _ in range(a.free_rank):
        orders.extend(b.torsion)
    for d in a.torsion:
        orders.extend(gcd(d, e) for e in b.torsion)
    return AbGroup.from_orders(free, orders)


def ext_group(a: AbGroup, b: AbGroup) -> AbGroup:
    """
    Ext(A, B): Ext(Z, B) = 0 and Ext(Z/d, B) = B/dB, summed over A.
    """
    orders: List[int] = []
    for d in a.torsion:
        orders.extend([d] * b.free_rank)
        orders.extend(gcd(d, e) for e in b.torsion)
    return AbGroup.from_orders(0, orders)


def hom_order(a: AbGroup, b: AbGroup) -> Optional[int]:
    """|hom(A, B)|, or None when it is infinite."""
    return hom_group(a, b).order()


def _even_torsion_indices(group: AbGroup) -> List[int]:
    r = group.free_rank
    return [r + i for i, d in enumerate(group.torsion) if d % 2 == 0]


def two_quotient_indices(group: AbGroup) -> List[int]:
    """Generators of A whose classes generate A/2A, in order."""
    return list(range(group.free_rank)) + _even_torsion_indices(group)


def two_torsion(group: AbGroup) -> Tuple[AbGroup, AbHom]:
    """
    The 2-torsion subgroup {a | 2a = 0} with its inclusion.

    One Z/2 per even invariant factor d_i, generated by (d_i / 2) e_i.
    """
    idx = _even_torsion_indices(group)
    sub = AbGroup(torsion=(2,) * len(idx))
    columns = []
    for i in idx:
        col = [0] * group.ngens
        col[i] = group.orders[i] // 2
        columns.append(col)
    return sub, AbHom.from_columns(sub, group, columns)


def two_quotient(group: AbGroup) -> Tuple[AbGroup, AbHom]:
    """
    The mod-2 quotient A/2A with its projection.

    One Z/2 per free generator and per even invariant factor.
    """
    idx = two_quotient_indices(group)
    quotient = AbGroup(torsion=(2,) * len(idx))
    columns = []
    for j in range(group.ngens):
        columns.append([1 if i == j else 0 for i in idx])
    return quotient, AbHom.from_columns(group, quotient, columns)


def to_two_torsion_coords(group: AbGroup, x: Sequence[int]) -> GroupElement:
    """
    Coordinates in two_torsion(group) of an element known to satisfy 2x = 0.

    Raises:
        InvalidElement: If x is not 2-torsion
    """
    x = group.reduce(x)
    if not group.is_zero(group.scale(2, x)):
        raise InvalidElement(f"{list(x)} is not 2-torsion in {group}", {"element": list(x)})
    return tuple(x[i] // (group.orders[i] // 2) for i in _even_torsion_indices(group))


def two_quotient_map(f: AbHom) -> AbHom:
    """The induced map A/2A -> B/2B."""
    qa, _ = two_quotient(f.source)
    qb, proj_b = two_quotient(f.target)
    columns = []
    for i in two_quotient_indices(f.source):
        columns.append(proj_b.apply(f.columns[i]))
    return AbHom.from_columns(qa, qb, columns)


def two_torsion_map(f: AbHom) -> AbHom:
    """The restriction 2A -> 2B."""
    ta, inc_a = two_torsion(f.source)
    tb, _ = two_torsion(f.target)
    columns = [to_two_torsion_coords(f.target, f.apply(col)) for col in inc_a.columns]
    return AbHom.from_columns(ta, tb, columns)


def enumerate_homs(a: AbGroup, b: AbGroup) -> List[AbHom]:
    """
    Every homomorphism A -> B, in lexicographic order of generator images.

    Raises:
        InfiniteHomSet: If A has free rank and B is infinite
    """
    if a.free_rank and not b.is_finite():
        raise InfiniteHomSet(f"hom({a}, {b}) is infinite")
    candidates = []
    for d in a.orders:
        candidates.append(list(b.elements()) if d == 0 else list(b.killed_by(d)))
    homs = [AbHom.from_columns(a, b, cols) for cols in product(*candidates)]
    logger.debug(f"enumerated {len(homs)} homomorphisms {a} -> {b}")
    return homs


def _with_target_relations(f: AbHom) -> Tuple[List[List[int]], int]:
    """
    The matrix [M | D_B]: f's matrix followed by one column d_j e_j per
    torsion generator of the target.
    """
    b = f.target
    n = f.source.ngens
    extra = list(range(b.free_rank, b.ngens))
    rows = []
    for i in range(b.ngens):
        rows.append(list(f.matrix[i]) + [b.orders[i] if i == j else 0 for j in extra])
    return rows, n + len(extra)


def cokernel(f: AbHom) -> Tuple[AbGroup, AbHom]:
    """
    coker(f) with the projection from f's target.
    """
    b = f.target
    relations = [list(col) for col in f.columns]
    for i in range(b.free_rank, b.ngens):
        relations.append([b.orders[i] if j == i else 0 for j in range(b.ngens)])
    group, projection = canonical_form(relations, b.ngens)
    return group, AbHom(b, group, projection.matrix)


def solve(f: AbHom, b: Sequence[int]) -> Optional[GroupElement]:
    """
    One source element x with f(x) = b, or None when b is not in the image.

    Solves M x + D_B z = b over the integers through Smith normal form.
    """
    target = f.target.reduce(b)
    rows, cols = _with_target_relations(f)
    w = solve_integer_system(rows, list(target), cols)
    if w is None:
        return None
    return f.source.reduce(w[: f.source.ngens])


def _kernel_lattice(f: AbHom) -> List[List[int]]:
    """Generators of {x in Z^n : M x lies in the target relations}."""
    rows, cols = _with_target_relations(f)
    n = f.source.ngens
    if not rows:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    return [vec[:n] for vec in integer_kernel(rows, cols)]


def kernel(f: AbHom) -> Tuple[AbGroup, AbHom]:
    """
    ker(f) with its inclusion into f's source.
    """
    a = f.source
    gens = [g for g in _kernel_lattice(f) if not a.is_zero(a.reduce(g))]
    s = len(gens)
    if s == 0:
        trivial = AbGroup.trivial()
        return trivial, zero_hom(trivial, a)
    # relations c with sum c_k g_k in the relation lattice of A
    extra = list(range(a.free_rank, a.ngens))
    rows = [[g[i] for g in gens] + [a.orders[i] if i == j else 0 for j in extra] for i in range(a.ngens)]
    relations = [vec[:s] for vec in integer_kernel(rows, s + len(extra))]
    group, projection = canonical_form(relations, s)
    along = AbHom.from_columns(AbGroup.free(s), a, gens)
    columns = []
    for j in range(group.ngens):
        unit = [1 if i == j else 0 for i in range(group.ngens)]
        c = solve(projection, unit)
        columns.append(along.apply(c))
    return group, AbHom.from_columns(group, a, columns)


def is_epi(f: AbHom) -> bool:
    return cokernel(f)[0].is_trivial()


def is_mono(f: AbHom) -> bool:
    a = f.source
    return all(a.is_zero(a.reduce(g)) for g in _kernel_lattice(f))


def lift_from_free(f: AbHom, g: AbHom) -> AbHom:
    """
    Lift g: P -> B through the epimorphism f: A -> B, for free P.

    Args:
        f: Epimorphism A -> B
        g: Homomorphism P -> B with P torsion-free

    Returns:
        AbHom: Some h: P -> A with f after h equal to g

    Raises:
        NotEpi: If f is not surjective
        SourceNotFree: If P has torsion
    """
    if g.source.torsion:
        raise SourceNotFree(f"lifting source {g.source} is not free")
    if f.target != g.target:
        raise SourceTargetMismatch(f"{f.target} and {g.target} differ")
    if not is_epi(f):
        raise NotEpi(f"{f} is not an epimorphism")
    columns = []
    for i, col in enumerate(g.columns):
        x = solve(f, col)
        if x is None:
            raise NotEpi(f"image of generator {i} has no preimage", {"generator": i})
        columns.append(x)
    h = AbHom.from_columns(g.source, f.source, columns)
    if get_settings().check_results and compose_homs(f, h) != g:
        raise PostconditionFailed("lift does not satisfy f h = g", {"lift": h.to_dict()})
    return h
