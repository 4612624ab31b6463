"""
Exhaustive projectivity and injectivity checks over a finite catalog of types.

These checkers never use the constructive solvers: every lifting or extension
problem is settled by enumerating all candidate morphisms, so they can also
exhibit failures for objects that are not projective or injective.
"""

import logging
from typing import Any, Callable, Dict, List, Sequence, Tuple, Union

from algebra.abelian import compose_homs
from algebra.divisible import compose_div, enumerate_div_homs
from algebra.types_cat import (
    adjoint_r_divisible,
    enumerate_type_morphisms,
    is_es,
    is_faithful,
    r_of,
)
from models.abelian import AbGroup, DivisibleGroup
from models.types import DivTypeMor, FragmentReport, TypeMor, TypeObj

logger = logging.getLogger(__name__)


class _MorphismCache:
    """Memoized hom-sets and predicates for one checker run."""

    def __init__(self) -> None:
        self._homs: Dict[Tuple[TypeObj, TypeObj], List[TypeMor]] = {}
        self._flags: Dict[Tuple[str, Any], bool] = {}

    def homs(self, a: TypeObj, b: TypeObj) -> List[TypeMor]:
        if (a, b) not in self._homs:
            self._homs[(a, b)] = enumerate_type_morphisms(a, b)
        return self._homs[(a, b)]

    def flag(self, name: str, predicate: Callable[[TypeMor], bool], f: TypeMor) -> bool:
        key = (name, f.f0 if name == "es" else f.f1)
        if key not in self._flags:
            self._flags[key] = predicate(f)
        return self._flags[key]


def check_projective_in_fragment(p: TypeObj, catalog: Sequence[TypeObj]) -> FragmentReport:
    """
    Test whether every morphism P -> B lifts along every essentially
    surjective f: A -> B with A, B in the catalog.

    Returns:
        FragmentReport: Pass flag, problem count and the first unliftable
        (f, g) pair
    """
    cache = _MorphismCache()
    tested = 0
    for b in catalog:
        gs = cache.homs(p, b)
        for a in catalog:
            es = [f for f in cache.homs(a, b) if cache.flag("es", is_es, f)]
            if not es:
                continue
            lifts = cache.homs(p, a)
            for f in es:
                reachable = {_composite_key(f, h) for h in lifts}
                for g in gs:
                    tested += 1
                    if g.key not in reachable:
                        logger.info(f"no lift of g through f after {tested} problems")
                        return FragmentReport(
                            False, tested, {"f": f.to_dict(), "g": g.to_dict()}
                        )
    logger.info(f"projectivity check passed on {tested} problems")
    return FragmentReport(True, tested)


def _maps_into_r(a: TypeObj, target: Union[AbGroup, DivisibleGroup], cache: _MorphismCache) -> List:
    if isinstance(target, DivisibleGroup):
        return [adjoint_r_divisible(a, target, v) for v in enumerate_div_homs(a.a1, target)]
    return cache.homs(a, r_of(target))


def _composite_key(g, f: TypeMor) -> Tuple:
    """Key of g after f, without re-validating the composite."""
    if isinstance(g, DivTypeMor):
        return (compose_div(g.f0, f.f0).images, compose_div(g.f1, f.f1).images)
    return (compose_homs(g.f0, f.f0).matrix, compose_homs(g.f1, f.f1).matrix)


def check_injective_in_fragment(
    target: Union[AbGroup, DivisibleGroup], catalog: Sequence[TypeObj]
) -> FragmentReport:
    """
    Test whether every morphism A -> r(I) extends along every faithful
    f: A -> B with A, B in the catalog.

    Args:
        target: I, either a divisible group or (for negative testing) any
            finitely generated group
        catalog: Finite types

    Returns:
        FragmentReport: Pass flag, problem count and the first
        non-extendable (f, g) pair
    """
    cache = _MorphismCache()
    into: Dict[TypeObj, List] = {}
    for a in catalog:
        into[a] = _maps_into_r(a, target, cache)
    tested = 0
    for a in catalog:
        gs = into[a]
        for b in catalog:
            faithful = [f for f in cache.homs(a, b) if cache.flag("faithful", is_faithful, f)]
            for f in faithful:
                reachable = {_composite_key(h, f) for h in into[b]}
                for g in gs:
                    tested += 1
                    if g.key not in reachable:
                        logger.info(f"no extension of g along f after {tested} problems")
                        return FragmentReport(
                            False, tested, {"f": f.to_dict(), "g": g.to_dict()}
                        )
    logger.info(f"injectivity check passed on {tested} problems")
    return FragmentReport(True, tested)
