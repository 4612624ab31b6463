"""
Symmetric monoidal functors between skeletal models, found by search.

A functor S1 -> S2 is a triple (f0, f1, theta). Given (f0, f1), put
b(x, y) = c2(f0 x, f0 y) - f1(c1(x, y)); theta must then be a normalized
2-cocycle with theta(y, x) = theta(x, y) + b(x, y). Only theta(x, y) with
x <= y (in element order) is free, so the search runs over those values and
checks every cocycle identity as soon as all of its terms are known.

Models whose pi_0 is Z with a bilinear symmetry (hbar and its relatives) are
handled separately: there every normalized 2-cocycle is a coboundary, so each
realizable (f0, f1) carries exactly one homotopy class, represented by the
bilinear cochains theta(n, m) = nm * a.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra.abelian import (
    compose_homs,
    enumerate_homs,
    ext_group,
    hom_group,
    identity_hom,
    is_epi,
    is_mono,
)
from algebra.config import get_settings
from algebra.errors import (
    InfiniteHomSet,
    NoThetaFound,
    NotComputable,
    SourceTargetMismatch,
    TooLarge,
)
from algebra.picard import generator_samples, sample_elements, type_of
from algebra.types_cat import enumerate_type_morphisms
from models.abelian import AbGroup, AbHom, GroupElement
from models.picard import (
    Cochain,
    CochainKind,
    CoherenceReport,
    Homotopy,
    HomotopyClasses,
    MonFunctor,
    SkeletalPicard,
)
from models.types import TypeMor

logger = logging.getLogger(__name__)

# (variable position, sign) and (x, y, sign) meaning sign * b(x, y)
_Terms = Tuple[Tuple[Tuple[int, int], ...], Tuple[Tuple[int, int, int], ...]]


@dataclass(frozen=True)
class _GroupTable:
    """A finite group with elements numbered in lexicographic order (0 is the zero)."""

    group: AbGroup
    elements: Tuple[GroupElement, ...]
    index: Dict[GroupElement, int]
    add: Tuple[Tuple[int, ...], ...]
    neg: Tuple[int, ...]

    def sub(self, i: int, j: int) -> int:
        return self.add[i][self.neg[j]]


@lru_cache(maxsize=None)
def _table(group: AbGroup) -> _GroupTable:
    elements = tuple(group.elements())
    index = {x: i for i, x in enumerate(elements)}
    add = tuple(tuple(index[group.add(x, y)] for y in elements) for x in elements)
    neg = tuple(index[group.neg(x)] for x in elements)
    return _GroupTable(group, elements, index, add, neg)


@dataclass(frozen=True)
class _Layout:
    """
    Free positions theta(x, y), 1 <= x <= y, and the cocycle identities on
    nonzero triples, each filed under the last position it mentions.
    """

    pairs: Tuple[Tuple[int, int], ...]
    position: Dict[Tuple[int, int], int]
    constraints: Tuple[Tuple[_Terms, ...], ...]


@lru_cache(maxsize=None)
def _layout(group: AbGroup) -> _Layout:
    g = _table(group)
    n = len(g.elements)
    pairs = tuple((x, y) for x in range(1, n) for y in range(x, n))
    position = {pair: i for i, pair in enumerate(pairs)}
    filed: List[List[_Terms]] = [[] for _ in pairs]

    def term(a: int, c: int, sign: int, var_terms: list, offsets: list) -> None:
        if a == 0 or c == 0:
            return
        if a <= c:
            var_terms.append((position[(a, c)], sign))
        else:
            var_terms.append((position[(c, a)], sign))
            offsets.append((c, a, sign))

    for x, y, z in product(range(1, n), repeat=3):
        var_terms: list = []
        offsets: list = []
        # theta(x, y) + theta(x + y, z) - theta(y, z) - theta(x, y + z) = 0
        term(x, y, 1, var_terms, offsets)
        term(g.add[x][y], z, 1, var_terms, offsets)
        term(y, z, -1, var_terms, offsets)
        term(x, g.add[y][z], -1, var_terms, offsets)
        last = max(p for p, _ in var_terms)
        filed[last].append((tuple(var_terms), tuple(offsets)))
    return _Layout(pairs, position, tuple(tuple(c) for c in filed))


@lru_cache(maxsize=None)
def _coboundaries(group: AbGroup, target: AbGroup) -> frozenset:
    """delta t on the free positions, for every normalized 1-cochain t."""
    g, k = _table(group), _table(target)
    layout = _layout(group)
    vectors = set()
    for rest in product(range(len(k.elements)), repeat=len(g.elements) - 1):
        t = (0,) + rest
        vectors.add(
            tuple(k.sub(t[g.add[x][y]], k.add[t[x]][t[y]]) for x, y in layout.pairs)
        )
    return frozenset(vectors)


def _ensure_searchable(source: SkeletalPicard, target: SkeletalPicard) -> None:
    if not source.pi0.is_finite() or not target.pi1.is_finite():
        raise NotComputable(
            f"functor search needs finite pi_0 of the source and pi_1 of the target, "
            f"got {source.pi0} and {target.pi1}"
        )
    variables = len(_layout(source.pi0).pairs)
    space = target.pi1.order() ** variables
    if space > get_settings().max_theta_space:
        raise TooLarge(
            f"theta search space {target.pi1.order()}^{variables} exceeds the configured bound",
            {"space": space},
        )


def _is_cyclic_rule(model: SkeletalPicard) -> bool:
    return model.pi0 == AbGroup.free(1) and model.sym.kind == CochainKind.BILINEAR


def _symmetry_defect(
    source: SkeletalPicard, target: SkeletalPicard, f0: AbHom, f1: AbHom
) -> Optional[List[List[int]]]:
    """b as a table of target-pi_1 indices, or None when b(x, x) != 0 somewhere."""
    g, k = _table(source.pi0), _table(target.pi1)
    images = [f0.apply(x) for x in g.elements]
    b = []
    for i, x in enumerate(g.elements):
        row = []
        for j, y in enumerate(g.elements):
            value = target.pi1.sub(target.c(images[i], images[j]), f1.apply(source.c(x, y)))
            row.append(k.index[value])
        if row[i] != 0:
            return None
        b.append(row)
    for i in range(len(b)):
        for j in range(i):
            if b[i][j] != k.neg[b[j][i]]:
                return None
    return b


def _solve(layout: _Layout, k: _GroupTable, b: List[List[int]], limit: Optional[int]) -> List[Tuple[int, ...]]:
    """All assignments of the free positions satisfying the cocycle identities, in lex order."""
    filed = []
    for constraints in layout.constraints:
        resolved = []
        for var_terms, offsets in constraints:
            const = 0
            for x, y, sign in offsets:
                v = b[x][y]
                const = k.add[const][v if sign > 0 else k.neg[v]]
            resolved.append((var_terms, const))
        filed.append(resolved)

    count = len(layout.pairs)
    size = len(k.elements)
    values = [0] * count
    solutions: List[Tuple[int, ...]] = []

    def holds(p: int) -> bool:
        for var_terms, const in filed[p]:
            acc = const
            for pos, sign in var_terms:
                v = values[pos]
                acc = k.add[acc][v if sign > 0 else k.neg[v]]
            if acc:
                return False
        return True

    def assign(p: int) -> bool:
        if p == count:
            solutions.append(tuple(values))
            return limit is not None and len(solutions) >= limit
        for v in range(size):
            values[p] = v
            if holds(p) and assign(p + 1):
                return True
        return False

    assign(0)
    return solutions


@dataclass(frozen=True)
class _Fiber:
    f0: AbHom
    f1: AbHom
    b: Tuple[Tuple[int, ...], ...]
    solutions: Tuple[Tuple[int, ...], ...]


def _fibers(
    source: SkeletalPicard,
    target: SkeletalPicard,
    pairs: Optional[Iterable[Tuple[AbHom, AbHom]]] = None,
    limit: Optional[int] = None,
) -> Iterator[_Fiber]:
    """The realizable (f0, f1) pairs between finite models with their theta solutions."""
    _ensure_searchable(source, target)
    layout = _layout(source.pi0)
    k = _table(target.pi1)
    if pairs is None:
        pairs = product(
            enumerate_homs(source.pi0, target.pi0), enumerate_homs(source.pi1, target.pi1)
        )
    for f0, f1 in pairs:
        b = _symmetry_defect(source, target, f0, f1)
        if b is None:
            continue
        solutions = _solve(layout, k, b, limit)
        if solutions:
            yield _Fiber(f0, f1, tuple(map(tuple, b)), tuple(solutions))


def _theta(source: SkeletalPicard, target: SkeletalPicard, b, values: Sequence[int]) -> Cochain:
    g, k = _table(source.pi0), _table(target.pi1)
    layout = _layout(source.pi0)
    n = len(g.elements)
    entries = []
    for x in range(1, n):
        for y in range(1, n):
            if x <= y:
                v = values[layout.position[(x, y)]]
            else:
                v = k.add[values[layout.position[(y, x)]]][b[y][x]]
            if v:
                entries.append((g.elements[x], g.elements[y], k.elements[v]))
    return Cochain(CochainKind.TABLE, target.pi1, table=tuple(entries))


def _bilinear(target: AbGroup, a: GroupElement) -> Cochain:
    return Cochain(CochainKind.BILINEAR, target, form=((tuple(a),),))


def _cyclic_pairs(
    source: SkeletalPicard, target: SkeletalPicard, pairs: Optional[Iterable[Tuple[AbHom, AbHom]]] = None
) -> Iterator[Tuple[AbHom, AbHom]]:
    """(f0, f1) out of a pi_0 = Z rule model with b identically zero on the window."""
    window = get_settings().coherence_window
    if pairs is None:
        pairs = product(
            enumerate_homs(source.pi0, target.pi0), enumerate_homs(source.pi1, target.pi1)
        )
    sample = list(sample_elements(source.pi0, window))
    for f0, f1 in pairs:
        if all(
            target.c(f0.apply(x), f0.apply(y)) == f1.apply(source.c(x, y))
            for x in sample
            for y in sample
        ):
            yield f0, f1


def _cyclic_target(target: SkeletalPicard) -> None:
    if not target.pi1.is_finite():
        raise NotComputable(f"functors out of a pi_0 = Z model need finite pi_1 of the target, got {target.pi1}")


def enumerate_functors(source: SkeletalPicard, target: SkeletalPicard) -> List[MonFunctor]:
    """
    Every normalized symmetric monoidal functor source -> target.

    For a pi_0 = Z rule source only the bilinear structures theta = nm * a
    are listed, one per a in pi_1 of the target.

    Raises:
        TooLarge: If the theta search space exceeds the configured bound
        NotComputable: If the models fall outside the supported cases
    """
    functors = []
    if _is_cyclic_rule(source):
        _cyclic_target(target)
        for f0, f1 in _cyclic_pairs(source, target):
            for a in target.pi1.elements():
                functors.append(MonFunctor(source, target, f0, f1, _bilinear(target.pi1, a)))
        return functors
    for fiber in _fibers(source, target):
        for values in fiber.solutions:
            theta = _theta(source, target, fiber.b, values)
            functors.append(MonFunctor(source, target, fiber.f0, fiber.f1, theta))
    logger.info(f"{len(functors)} functors {source.pi0},{source.pi1} -> {target.pi0},{target.pi1}")
    return functors


def homotopy_classes(source: SkeletalPicard, target: SkeletalPicard) -> HomotopyClasses:
    """
    Brute-force pi_0(Hom(source, target)): functors modulo homotopy.

    Each class is represented by its lexicographically least theta.
    """
    reps: List[MonFunctor] = []
    fibers = []
    if _is_cyclic_rule(source):
        _cyclic_target(target)
        for f0, f1 in _cyclic_pairs(source, target):
            reps.append(MonFunctor(source, target, f0, f1, _bilinear(target.pi1, target.pi1.zero())))
            fibers.append(((f0.matrix, f1.matrix), 1))
        return HomotopyClasses(len(reps), tuple(reps), tuple(fibers))

    k = _table(target.pi1)
    cob = _coboundaries(source.pi0, target.pi1)
    for fiber in _fibers(source, target):
        seen = set()
        classes = 0
        for values in fiber.solutions:
            if values in seen:
                continue
            # solutions arrive in lex order, so this one is least in its class
            seen.update(tuple(k.add[v][c] for v, c in zip(values, t)) for t in cob)
            classes += 1
            reps.append(
                MonFunctor(source, target, fiber.f0, fiber.f1, _theta(source, target, fiber.b, values))
            )
        fibers.append(((fiber.f0.matrix, fiber.f1.matrix), classes))
    logger.info(f"{len(reps)} homotopy classes over {len(fibers)} realizable (f0, f1)")
    return HomotopyClasses(len(reps), tuple(reps), tuple(fibers))


def pi0_hom_predicted(source: SkeletalPicard, target: SkeletalPicard) -> int:
    """
    |Ext(pi0 S1, pi1 S2)| * |TYPES(type S1, type S2)|.

    Raises:
        InfiniteHomSet: If either factor is infinite
    """
    ext = ext_group(source.pi0, target.pi1).order()
    if ext is None:
        raise InfiniteHomSet(f"Ext({source.pi0}, {target.pi1}) is infinite")
    return ext * len(enumerate_type_morphisms(type_of(source), type_of(target)))


def pi1_hom(source: SkeletalPicard, target: SkeletalPicard) -> AbGroup:
    """pi_1(Hom(S1, S2)) = hom(pi0 S1, pi1 S2): the additive self-homotopies of any functor."""
    return hom_group(source.pi0, target.pi1)


def count_additive_homotopies(source: SkeletalPicard, target: SkeletalPicard) -> int:
    """
    Count the 1-cochains t: pi0 S1 -> pi1 S2 with t(0) = 0 and
    t(x + y) = t(x) + t(y), by brute force.

    For a pi_0 = Z source the candidates are t(n) = C(n, 2) q + n l with
    q, l in pi1 S2, tested on the configured window.
    """
    k_group = target.pi1
    if not k_group.is_finite():
        raise NotComputable(f"cannot enumerate cochains into {k_group}")
    if source.pi0 == AbGroup.free(1):
        window = get_settings().coherence_window
        sample = [x[0] for x in sample_elements(source.pi0, window)]

        def closed_form(n: int, q: GroupElement, l: GroupElement) -> GroupElement:
            return k_group.add(k_group.scale(n * (n - 1) // 2, q), k_group.scale(n, l))

        count = 0
        for q, l in product(list(k_group.elements()), repeat=2):
            if all(
                closed_form(n + m, q, l) == k_group.add(closed_form(n, q, l), closed_form(m, q, l))
                for n in sample
                for m in sample
            ):
                count += 1
        return count
    if not source.pi0.is_finite():
        raise NotComputable(f"cannot enumerate cochains on {source.pi0}")
    g, k = _table(source.pi0), _table(k_group)
    n = len(g.elements)
    if len(k.elements) ** (n - 1) > get_settings().max_theta_space:
        raise TooLarge(f"{len(k.elements)}^{n - 1} cochains exceed the configured bound")
    count = 0
    for rest in product(range(len(k.elements)), repeat=n - 1):
        t = (0,) + rest
        if all(t[g.add[x][y]] == k.add[t[x]][t[y]] for x in range(1, n) for y in range(x, n)):
            count += 1
    return count


def realize_morphism(f: TypeMor, source: SkeletalPicard, target: SkeletalPicard) -> MonFunctor:
    """
    A functor with underlying (f0, f1) = f and the lexicographically least theta.

    Raises:
        SourceTargetMismatch: If the models do not have f's source and target as types
        NoThetaFound: If no monoidal structure exists; this means the type
            functor failed to be full and is always a bug
    """
    if type_of(source) != f.source or type_of(target) != f.target:
        raise SourceTargetMismatch("the models do not realize the source and target of f")
    if _is_cyclic_rule(source):
        _cyclic_target(target)
        if not list(_cyclic_pairs(source, target, [(f.f0, f.f1)])):
            raise NoThetaFound("no monoidal structure over f", {"morphism": f.to_dict()})
        return MonFunctor(source, target, f.f0, f.f1, _bilinear(target.pi1, target.pi1.zero()))
    fibers = list(_fibers(source, target, [(f.f0, f.f1)], limit=1))
    if not fibers:
        logger.error(f"no theta over a type morphism between {f.source} and {f.target}")
        raise NoThetaFound("no monoidal structure over f", {"morphism": f.to_dict()})
    fiber = fibers[0]
    return MonFunctor(source, target, f.f0, f.f1, _theta(source, target, fiber.b, fiber.solutions[0]))


def identity_functor(model: SkeletalPicard) -> MonFunctor:
    if model.pi0.is_finite():
        theta = Cochain.zero_table(model.pi1)
    else:
        n = model.pi0.ngens
        zero = model.pi1.zero()
        theta = Cochain(CochainKind.BILINEAR, model.pi1, form=tuple((zero,) * n for _ in range(n)))
    return MonFunctor(model, model, identity_hom(model.pi0), identity_hom(model.pi1), theta)


def compose_functors(g: MonFunctor, f: MonFunctor) -> MonFunctor:
    """
    The composite g after f, with theta(x, y) = g1(theta_f(x, y)) + theta_g(f0 x, f0 y).

    Raises:
        SourceTargetMismatch: If f's target is not g's source
        NotComputable: If the source of f has infinite pi_0
    """
    if f.target != g.source:
        raise SourceTargetMismatch("functors are not composable")
    source, target = f.source, g.target
    if not source.pi0.is_finite():
        raise NotComputable(f"cannot tabulate a composite on {source.pi0}")
    k = target.pi1
    elements = list(source.pi0.elements())
    entries = []
    for x, y in product(elements, repeat=2):
        v = k.add(g.f1.apply(f.theta.evaluate(x, y)), g.theta.evaluate(f.f0.apply(x), f.f0.apply(y)))
        if any(v):
            entries.append((x, y, v))
    theta = Cochain(CochainKind.TABLE, k, table=tuple(entries))
    return MonFunctor(source, target, compose_homs(g.f0, f.f0), compose_homs(g.f1, f.f1), theta)


def check_functor(functor: MonFunctor, window: Optional[int] = None) -> CoherenceReport:
    """
    Check normalization, the cocycle identity and symmetry compatibility
    theta(y, x) - theta(x, y) = c2(f0 x, f0 y) - f1(c1(x, y)).

    When pi_0 of the source is infinite and theta and both symmetries are
    bilinear, the second argument ranges over generator_samples() and the
    cocycle identity is checked through biadditivity of theta, which
    implies it.
    """
    source, target = functor.source, functor.target
    if (functor.f0.source, functor.f0.target) != (source.pi0, target.pi0) or (
        functor.f1.source,
        functor.f1.target,
    ) != (source.pi1, target.pi1):
        raise SourceTargetMismatch("f0/f1 do not match the source and target models")
    if window is None:
        window = get_settings().coherence_window
    g, k = source.pi0, target.pi1
    theta, f0, f1 = functor.theta.evaluate, functor.f0.apply, functor.f1.apply
    elements = list(sample_elements(g, window))
    bilinear = not g.is_finite() and all(
        kind == CochainKind.BILINEAR for kind in (functor.theta.kind, source.sym.kind, target.sym.kind)
    )
    partners = generator_samples(g) if bilinear else elements
    failures: Dict[str, Tuple[GroupElement, ...]] = {}

    for x in elements:
        if not k.is_zero(theta(g.zero(), x)) or not k.is_zero(theta(x, g.zero())):
            failures.setdefault("normalization", (x,))
        for y in partners:
            lhs = k.sub(theta(y, x), theta(x, y))
            rhs = k.sub(target.c(f0(x), f0(y)), f1(source.c(x, y)))
            if lhs != rhs:
                failures.setdefault("symmetry", (x, y))

    checked = 0
    for x in elements:
        for y, z in product(partners, repeat=2):
            checked += 1
            if bilinear:
                yz = g.add(y, z)
                holds = k.is_zero(k.sub(theta(x, yz), k.add(theta(x, y), theta(x, z)))) and k.is_zero(
                    k.sub(theta(yz, x), k.add(theta(y, x), theta(z, x)))
                )
            else:
                lhs = k.add(theta(x, y), theta(g.add(x, y), z))
                rhs = k.add(theta(y, z), theta(x, g.add(y, z)))
                holds = lhs == rhs
            if not holds:
                failures.setdefault("cocycle", (x, y, z))
    return CoherenceReport(
        passed=not failures,
        checked=checked,
        window=None if g.is_finite() else window,
        failures=tuple(sorted(failures.items())),
    )


def find_homotopy(f: MonFunctor, g: MonFunctor) -> Optional[Homotopy]:
    """
    A track f => g, or None when f and g are not homotopic.

    Raises:
        NotComputable: For infinite sources other than bilinear structures on Z
    """
    if (f.source, f.target) != (g.source, g.target) or (f.f0, f.f1) != (g.f0, g.f1):
        return None
    k_group = f.target.pi1
    if _is_cyclic_rule(f.source):
        if {f.theta.kind, g.theta.kind} != {CochainKind.BILINEAR}:
            raise NotComputable("tracks out of a pi_0 = Z model need bilinear structures")
        diff = k_group.sub(g.theta.form[0][0], f.theta.form[0][0])
        return Homotopy(f, g, quadratic=diff, linear=k_group.zero())
    _ensure_searchable(f.source, f.target)
    gt, k = _table(f.source.pi0), _table(k_group)
    n = len(gt.elements)
    delta = [
        [k.index[k_group.sub(g.theta.evaluate(x, y), f.theta.evaluate(x, y))] for y in gt.elements]
        for x in gt.elements
    ]
    for rest in product(range(len(k.elements)), repeat=n - 1):
        t = (0,) + rest
        if all(
            delta[x][y] == k.sub(t[gt.add[x][y]], k.add[t[x]][t[y]])
            for x in range(1, n)
            for y in range(1, n)
        ):
            table = tuple((gt.elements[i], k.elements[v]) for i, v in enumerate(t) if v)
            return Homotopy(f, g, table=table)
    return None


def functor_is_es(functor: MonFunctor) -> bool:
    """Essentially surjective: f0 is onto."""
    return is_epi(functor.f0)


def functor_is_faithful(functor: MonFunctor) -> bool:
    return is_mono(functor.f1)
