"""
Divisible hulls and extension of maps into divisible groups.
"""

import logging
from fractions import Fraction
from itertools import product
from math import lcm
from typing import List, Tuple

from sympy import factorint

from algebra.abelian import is_mono
from algebra.config import get_settings
from algebra.errors import InfiniteHomSet, NotMono, PostconditionFailed, SourceTargetMismatch
from algebra.snf import diagonal, integer_kernel, smith_normal_form
from models.abelian import AbGroup, AbHom, DivElement, DivHom, DivisibleGroup

logger = logging.getLogger(__name__)


def injective_hull(group: AbGroup) -> Tuple[DivisibleGroup, DivHom]:
    """
    Embed A into Q^r + sum of Z(p^inf), one Pruefer copy per p-primary
    cyclic factor of A.

    A free generator goes to 1 in its own Q copy; a torsion generator of
    order d = prod p^k goes to 1/p^k in each of its Pruefer copies.

    Returns:
        Tuple[DivisibleGroup, DivHom]: The hull and the embedding
    """
    # copies per prime, in the order the generators contribute them
    slots: List[Tuple[int, int, int]] = []  # (prime, generator, exponent)
    for j, d in enumerate(group.torsion):
        for p, k in sorted(factorint(d).items()):
            slots.append((int(p), group.free_rank + j, int(k)))
    counts = {}
    for p, _, _ in slots:
        counts[p] = counts.get(p, 0) + 1
    hull = DivisibleGroup.from_mapping(group.free_rank, counts)

    # storage order of copies is by prime, then by generator
    ordered = sorted(slots, key=lambda s: (s[0], s[1]))
    images = []
    for j in range(group.ngens):
        q = [Fraction(1 if i == j else 0) for i in range(group.free_rank)]
        pr = [Fraction(1, p**k) if gen == j else Fraction(0) for p, gen, k in ordered]
        images.append(DivElement(tuple(q), tuple(pr)))
    embedding = DivHom(group, hull, tuple(images))
    logger.debug(f"injective hull of {group}: {hull}")
    return hull, embedding


def compose_div(h: DivHom, f: AbHom) -> DivHom:
    """
    The composite h after f, for f: A -> B and h: B -> Q.
    """
    if f.target != h.source:
        raise SourceTargetMismatch(f"cannot compose {h.source} <- {f.target}")
    return DivHom(f.source, h.target, tuple(h.apply(col) for col in f.columns))


def zero_div_hom(source: AbGroup, target: DivisibleGroup) -> DivHom:
    return DivHom(source, target, (target.zero(),) * source.ngens)


def enumerate_div_homs(source: AbGroup, target: DivisibleGroup) -> List[DivHom]:
    """
    Every homomorphism from a finite group into a divisible group.

    Raises:
        InfiniteHomSet: If the source has free rank and the target is nontrivial
    """
    if source.free_rank and not target.is_trivial():
        raise InfiniteHomSet(f"hom({source}, {target}) is infinite")
    candidates = [
        [target.zero()] if d == 0 else list(target.killed_by(d)) for d in source.orders
    ]
    return [DivHom(source, target, tuple(images)) for images in product(*candidates)]


def extend_into_divisible(f: AbHom, g: DivHom) -> DivHom:
    """
    Extend g: A -> D along the monomorphism f: A -> B.

    The lattice L in Z^m spanned by the images of A's generators and by the
    torsion relations of B is diagonalized: U [F | R_B] V = D gives the basis
    u_k = columns of U^-1 of Z^m with d_k u_k spanning L. The known value of
    the map on d_k u_k is divided by d_k in D, which is always possible, and
    the answer is transported back to the generators e_j = sum_k U[k][j] u_k.

    Args:
        f: Monomorphism A -> B
        g: Homomorphism A -> D into a divisible group

    Returns:
        DivHom: Some h: B -> D with h after f equal to g

    Raises:
        NotMono: If f is not injective
    """
    if f.source != g.source:
        raise SourceTargetMismatch(f"{f.source} and {g.source} differ")
    if not is_mono(f):
        raise NotMono(f"{f} is not a monomorphism")
    b = f.target
    target = g.target
    m = b.ngens
    n = f.source.ngens

    gens = [list(col) for col in f.columns]
    values = list(g.images)
    for i in range(b.free_rank, m):
        gens.append([b.orders[i] if j == i else 0 for j in range(m)])
        values.append(target.zero())
    cols = len(gens)

    if m == 0:
        h = DivHom(b, target, ())
    else:
        rows = [[gens[c][i] for c in range(cols)] for i in range(m)]
        u, d, v = smith_normal_form(rows, cols=cols)
        diag = diagonal(d) if cols else []
        on_basis = []
        for k in range(m):
            dk = diag[k] if k < len(diag) else 0
            if dk == 0:
                on_basis.append(target.zero())
                continue
            known = target.zero()
            for c in range(cols):
                if v[c][k]:
                    known = target.add(known, target.scale(v[c][k], values[c]))
            on_basis.append(target.divide(known, dk))
        images = []
        for j in range(m):
            total = target.zero()
            for k in range(m):
                if u[k][j]:
                    total = target.add(total, target.scale(u[k][j], on_basis[k]))
            images.append(total)
        h = DivHom(b, target, tuple(images))

    logger.debug(f"extended {n}-generator map along {f.source} -> {b}")
    if get_settings().check_results and compose_div(h, f) != g:
        raise PostconditionFailed("extension does not satisfy h f = g", {"extension": h.to_dict()})
    return h


def is_div_mono(h: DivHom) -> bool:
    """
    Injectivity of h: A -> D.

    Torsion of A maps into the Pruefer part, so h is injective iff the Q parts
    of the free generators' images are linearly independent and h is
    injective on the (finite) torsion subgroup.
    """
    a, target = h.source, h.target
    r = a.free_rank
    if r:
        columns = [h.images[j].q_part for j in range(r)]
        scale = lcm(*(x.denominator for col in columns for x in col)) if target.q_rank else 1
        rows = [[int(columns[j][i] * scale) for j in range(r)] for i in range(target.q_rank)]
        if not rows or integer_kernel(rows, r):
            return False
    torsion = product(*(range(d) for d in a.torsion))
    for t in torsion:
        if any(t) and target.is_zero(h.apply((0,) * r + t)):
            return False
    return True
