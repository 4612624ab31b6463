"""
Skeletal models of symmetric categorical groups.

realize() builds a model of a given type with trivial associator and a
biadditive symmetry cochain; type_of() reads the type back off the symmetry;
coherence_check() audits the axioms a skeletal model with trivial associator
has to satisfy.
"""

import logging
from itertools import product
from typing import Iterator, List, Optional, Sequence

from algebra.abelian import (
    compose_homs,
    to_two_torsion_coords,
    two_quotient,
    two_quotient_indices,
    two_torsion,
)
from algebra.config import get_settings
from algebra.errors import IncoherentModel, InvalidElement
from algebra.types_cat import make_type
from models.abelian import AbGroup, AbHom, GroupElement
from models.picard import Cochain, CochainKind, CoherenceReport, SkeletalPicard
from models.types import TypeObj

logger = logging.getLogger(__name__)


def _diagonal_values(a: TypeObj) -> List[GroupElement]:
    """c(e_i, e_i) for every generator of A0: the image of e_i under A0 -> A0/2A0 -> 2A1 -> A1."""
    _, proj = two_quotient(a.a0)
    _, inc = two_torsion(a.a1)
    return list(compose_homs(inc, compose_homs(a.alpha, proj)).columns)


def realize(a: TypeObj) -> SkeletalPicard:
    """
    The skeletal model H(A) with pi_0 = A0, pi_1 = A1 and the diagonal
    biadditive symmetry c(e_i, e_j) = 0 for i != j, c(e_i, e_i) = alpha(e_i).

    Finite A0 gives a TABLE model listing every nonzero value; otherwise the
    symmetry is kept as a bilinear form on generators.
    """
    values = _diagonal_values(a)
    n = a.a0.ngens
    zero = a.a1.zero()
    form = tuple(
        tuple(values[i] if i == j else zero for j in range(n)) for i in range(n)
    )
    bilinear = Cochain(CochainKind.BILINEAR, a.a1, form=form)
    if not a.a0.is_finite():
        return SkeletalPicard(a.a0, a.a1, bilinear)

    elements = list(a.a0.elements())
    entries = []
    for x, y in product(elements, repeat=2):
        v = bilinear.evaluate(x, y)
        if any(v):
            entries.append((x, y, v))
    logger.debug(f"realized {a} with {len(entries)} nonzero symmetry values")
    return SkeletalPicard(a.a0, a.a1, Cochain(CochainKind.TABLE, a.a1, table=tuple(entries)))


def hbar() -> SkeletalPicard:
    """
    The free model on one object: pi_0 = Z, pi_1 = Z/2 = {0, eps},
    symmetry c(n, m) = nm * eps.
    """
    z2 = AbGroup.cyclic(2)
    return SkeletalPicard(
        AbGroup.free(1), z2, Cochain(CochainKind.BILINEAR, z2, form=(((1,),),)), name="hbar"
    )


def hbar_literal() -> SkeletalPicard:
    """The constant reading c(n, m) = eps for all nonzero n, m. Not coherent."""
    z2 = AbGroup.cyclic(2)
    return SkeletalPicard(
        AbGroup.free(1), z2, Cochain(CochainKind.CONSTANT, z2, constant=(1,)), name="hbar-literal"
    )


def _signed_range(window: int) -> List[int]:
    values = [0]
    for k in range(1, window + 1):
        values.extend((k, -k))
    return values


def sample_elements(group: AbGroup, window: Optional[int] = None) -> Iterator[GroupElement]:
    """
    Every element of a finite group, or for an infinite one every element
    whose free coordinates lie in [-window, window], ordered 0, 1, -1, 2, -2, ...
    """
    if group.is_finite():
        return group.elements()
    if window is None or window < 1:
        raise InvalidElement(f"a window >= 1 is needed to sample {group}")
    ranges = [_signed_range(window)] * group.free_rank + [range(d) for d in group.torsion]
    return iter(product(*ranges))


def generator_samples(group: AbGroup) -> List[GroupElement]:
    """Zero and every canonical generator with its negative, in coordinate order."""
    samples = [group.zero()]
    for i in range(group.ngens):
        for sign in (1, -1):
            coords = [0] * group.ngens
            coords[i] = sign
            x = group.reduce(coords)
            if x not in samples:
                samples.append(x)
    return samples


def coherence_check(model: SkeletalPicard, window: Optional[int] = None) -> CoherenceReport:
    """
    Check normalization, the two biadditivity laws (the hexagons for a trivial
    associator) and symmetry c(x, y) + c(y, x) = 0.

    The pentagon holds trivially and is reported as a note. For rule models
    the first argument ranges over the window; the first failing tuple of
    each axiom is kept as its witness.

    A bilinear cochain on an infinite pi_0 is additive in each argument
    wherever it is additive against the generators, so its partners y, z
    range over generator_samples() instead of the window. Table and
    constant cochains are checked on all triples.

    Args:
        model: The model to audit
        window: Argument bound for infinite pi_0; defaults to the configured window

    Returns:
        CoherenceReport: Pass flag, tuple count and witnesses
    """
    if window is None:
        window = get_settings().coherence_window
    g, k = model.pi0, model.pi1
    elements = list(sample_elements(g, window))
    partners = elements
    if not g.is_finite() and model.sym.kind == CochainKind.BILINEAR:
        partners = generator_samples(g)
    c = model.c
    failures = {}

    def fail(axiom: str, witness: Sequence[GroupElement]) -> None:
        if axiom not in failures:
            failures[axiom] = tuple(witness)
            logger.info(f"{axiom} fails at {[list(w) for w in witness]}")

    for x in elements:
        if not k.is_zero(c(g.zero(), x)) or not k.is_zero(c(x, g.zero())):
            fail("normalization", (x,))
        for y in partners:
            if not k.is_zero(k.add(c(x, y), c(y, x))):
                fail("symmetry", (x, y))

    checked = 0
    for x in elements:
        for y, z in product(partners, repeat=2):
            checked += 1
            yz = g.add(y, z)
            second = k.sub(c(x, yz), k.add(c(x, y), c(x, z)))
            first = k.sub(c(yz, x), k.add(c(y, x), c(z, x)))
            if not k.is_zero(second) or not k.is_zero(first):
                fail("biadditivity", (x, y, z))

    report = CoherenceReport(
        passed=not failures,
        checked=checked,
        window=None if g.is_finite() else window,
        failures=tuple(sorted(failures.items())),
        notes=(("pentagon", "vacuous: the associator is trivial"),),
    )
    logger.info(f"coherence of {model.name or 'model'}: passed={report.passed} on {checked} triples")
    return report


def type_of(model: SkeletalPicard, window: Optional[int] = None) -> TypeObj:
    """
    Read (pi0, pi1, alpha) off the quadratic map q(x) = c(x, x).

    alpha is taken from q on the generators that survive mod 2; q is then
    required to equal alpha(x mod 2) on every element (or every element in
    the window for rule models), which checks that it is additive mod 2 and
    2-torsion valued.

    Raises:
        IncoherentModel: If q does not come from a homomorphism
            pi0/2pi0 -> 2-torsion of pi1
    """
    if window is None:
        window = get_settings().coherence_window
    g, k = model.pi0, model.pi1
    qa, proj = two_quotient(g)
    ta, inc = two_torsion(k)

    columns = []
    for i in two_quotient_indices(g):
        e = tuple(1 if j == i else 0 for j in range(g.ngens))
        value = model.c(e, e)
        try:
            columns.append(to_two_torsion_coords(k, value))
        except InvalidElement:
            raise IncoherentModel(
                f"q(e_{i}) = {list(value)} is not 2-torsion", {"element": list(e)}
            )
    alpha = AbHom.from_columns(qa, ta, columns)

    q_hat = compose_homs(inc, compose_homs(alpha, proj))
    for x in sample_elements(g, window):
        if model.c(x, x) != q_hat.apply(x):
            raise IncoherentModel(
                f"q(x) = c(x, x) is not induced by a homomorphism at x = {list(x)}",
                {"element": list(x), "value": list(model.c(x, x))},
            )
    return make_type(g, k, alpha)
