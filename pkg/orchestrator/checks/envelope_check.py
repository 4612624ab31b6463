# envelope_check.py
# Enough projectives and injectives: canonical covers and embeddings over the catalog

from typing import Any, Dict, Optional, Sequence

from algebra.envelopes import (
    check_cover_factorization,
    check_embedding_extension,
    embedding_is_faithful,
    injective_embedding,
    projective_cover,
)
from algebra.types_cat import is_es
from orchestrator.base_check import BaseCheck
from models.types import TypeObj


class EnvelopeCheck(BaseCheck):
    """
    For every catalog type A: the cover l(P) -> A is es and lifts through
    every es morphism onto A; the embedding A -> r(Q) is faithful and extends
    along every faithful morphism out of A.
    """

    def __init__(self, check_name: str = "envelopes", catalog: Optional[Sequence[TypeObj]] = None):
        super().__init__(check_name=check_name, catalog=catalog)

    def _run(self, context: Dict[str, Any]) -> Dict[str, Any]:
        lifts = extensions = 0
        for a in self.catalog:
            _, cover = projective_cover(a)
            _, emb = injective_embedding(a)
            problems = []
            if not is_es(cover):
                problems.append("cover is not essentially surjective")
            if not embedding_is_faithful(emb):
                problems.append("embedding is not faithful")
            cover_report = check_cover_factorization(a, self.catalog)
            emb_report = check_embedding_extension(a, self.catalog)
            lifts += cover_report.problems_tested
            extensions += emb_report.problems_tested
            if not cover_report.passed:
                problems.append("cover does not factor")
            if not emb_report.passed:
                problems.append("embedding does not extend")
            if problems:
                self.logger.error(f"envelope check fails for {a}: {problems}")
                return {
                    "passed": False,
                    "lifts": lifts,
                    "extensions": extensions,
                    "counterexample": {
                        "type": a.to_dict(),
                        "problems": problems,
                        "cover": cover_report.counterexample,
                        "embedding": emb_report.counterexample,
                    },
                }
        return {"passed": True, "lifts": lifts, "extensions": extensions, "counterexample": None}
