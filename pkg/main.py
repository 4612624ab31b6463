"""
picardkit command line.

Reads groups, types, morphisms and skeletal models from JSON documents, runs
computations and verification suites, and prints a report to standard output.
Exit status: 0 when every check passes, 1 on a mathematical failure (the
report carries the witness), 2 on an input error.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple

from algebra.abelian import ext_group, hom_group
from algebra.config import get_settings
from algebra.envelopes import embedding_is_faithful, end_invariants, injective_embedding, projective_cover
from algebra.errors import AlgebraError
from algebra.functors import count_additive_homotopies, homotopy_classes, pi0_hom_predicted, pi1_hom
from algebra.picard import coherence_check, hbar, hbar_literal, realize, type_of
from algebra.types_cat import (
    enumerate_type_morphisms,
    extend_through_faithful,
    is_es,
    l_of,
    lift_through_es,
    r_of,
)
from models.picard import SkeletalPicard
from orchestrator.tools import TOOL_REGISTRY, DocumentError
from orchestrator.verify_orchestrator import CATALOG_SUITES, VerifyOrchestrator

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2

BUILTIN_MODELS = {"hbar": hbar, "hbar-literal": hbar_literal}

Outcome = Tuple[Dict[str, Any], bool]


def _load(path: str, expect) -> Any:
    return TOOL_REGISTRY['document_loader'].run(file_path=path, expect=expect)["value"]


def _load_model(arg: str) -> SkeletalPicard:
    """A builtin model name, a model document, or a type document (realized)."""
    if arg in BUILTIN_MODELS:
        return BUILTIN_MODELS[arg]()
    loaded = TOOL_REGISTRY['document_loader'].run(file_path=arg, expect=("model", "type"))
    return loaded["value"] if loaded["kind"] == "model" else realize(loaded["value"])


def _group_report(group) -> Dict[str, Any]:
    return {"group": group.to_dict(), "invariants": str(group), "order": group.order()}


# group

def cmd_group_normalize(args) -> Outcome:
    return _group_report(_load(args.file, "group")), True


def cmd_group_hom(args) -> Outcome:
    return _group_report(hom_group(_load(args.a, "group"), _load(args.b, "group"))), True


def cmd_group_ext(args) -> Outcome:
    return _group_report(ext_group(_load(args.a, "group"), _load(args.b, "group"))), True


# type

def cmd_type_make(args) -> Outcome:
    return {"type": _load(args.file, "type").to_dict(), "valid": True}, True


def cmd_type_l(args) -> Outcome:
    return {"type": l_of(_load(args.file, "group")).to_dict(), "valid": True}, True


def cmd_type_r(args) -> Outcome:
    return {"type": r_of(_load(args.file, "group")).to_dict(), "valid": True}, True


def cmd_type_homs(args) -> Outcome:
    morphisms = enumerate_type_morphisms(_load(args.a, "type"), _load(args.b, "type"))
    listed = [
        {"f0": [list(r) for r in f.f0.matrix], "f1": [list(r) for r in f.f1.matrix]} for f in morphisms
    ]
    return {"count": len(morphisms), "morphisms": listed}, True


def cmd_type_lift(args) -> Outcome:
    h = lift_through_es(_load(args.f, "morphism"), _load(args.g, "morphism"))
    return {"lift": h.to_dict()}, True


def cmd_type_extend(args) -> Outcome:
    h = extend_through_faithful(_load(args.f, "morphism"), _load(args.g, "div_morphism"))
    return {"extension": h.to_dict()}, True


# picard

def cmd_picard_realize(args) -> Outcome:
    return {"model": realize(_load(args.file, "type")).to_dict()}, True


def cmd_picard_type_of(args) -> Outcome:
    return {"type": type_of(_load_model(args.model)).to_dict()}, True


def cmd_picard_check(args) -> Outcome:
    report = coherence_check(_load_model(args.model), args.window)
    return report.to_dict(), report.passed


def cmd_picard_hbar(args) -> Outcome:
    return {"model": hbar().to_dict()}, True


def cmd_picard_pi0hom(args) -> Outcome:
    s1, s2 = _load_model(args.s1), _load_model(args.s2)
    predicted = pi0_hom_predicted(s1, s2)
    brute = homotopy_classes(s1, s2).count if args.brute_force else None
    agree = brute is None or brute == predicted
    return {"predicted": predicted, "brute_force": brute, "agree": agree}, agree


def cmd_picard_pi1hom(args) -> Outcome:
    s1, s2 = _load_model(args.s1), _load_model(args.s2)
    predicted = pi1_hom(s1, s2)
    brute = count_additive_homotopies(s1, s2) if args.brute_force else None
    agree = brute is None or brute == predicted.order()
    report = {"predicted": predicted.to_dict(), "invariants": str(predicted), "brute_force": brute, "agree": agree}
    return report, agree


# verify

def _envelope_outcome(envelope: Dict[str, Any]) -> Outcome:
    return envelope, envelope["status"] == "success"


def cmd_verify_suite(args) -> Outcome:
    orchestrator = VerifyOrchestrator.from_catalog_file(args.catalog)
    return _envelope_outcome(orchestrator.run_check(args.suite))


def cmd_verify_projective(args) -> Outcome:
    orchestrator = VerifyOrchestrator.from_catalog_file(args.catalog)
    return _envelope_outcome(orchestrator.run_check("projective", {"type": _load(args.file, "type")}))


def cmd_verify_injective(args) -> Outcome:
    orchestrator = VerifyOrchestrator.from_catalog_file(args.catalog)
    target = _load(args.file, ("divisible", "group"))
    return _envelope_outcome(orchestrator.run_check("injective", {"target": target}))


def cmd_verify_all(args) -> Outcome:
    results = VerifyOrchestrator.from_catalog_file(args.catalog).run_all_checks()
    return results, all(r["status"] == "success" for r in results.values())


# envelope

def cmd_envelope_cover(args) -> Outcome:
    p, cover = projective_cover(_load(args.file, "type"))
    es = is_es(cover)
    return {"free": p.to_dict(), "cover": cover.to_dict(), "es": es}, es


def cmd_envelope_embed(args) -> Outcome:
    q, emb = injective_embedding(_load(args.file, "type"))
    faithful = embedding_is_faithful(emb)
    return {"divisible": q.to_dict(), "embedding": emb.to_dict(), "faithful": faithful}, faithful


def cmd_envelope_end_invariants(args) -> Outcome:
    return end_invariants(_load_model(args.model)).to_dict(), True


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picardkit", description=__doc__.splitlines()[1])
    parser.add_argument("--format", choices=("structured", "plain"), default="structured")
    areas = parser.add_subparsers(dest="area", required=True)

    group = areas.add_parser("group", help="finitely generated abelian groups").add_subparsers(dest="command", required=True)
    p = group.add_parser("normalize")
    p.add_argument("file")
    p.set_defaults(handler=cmd_group_normalize)
    for name, handler in (("hom", cmd_group_hom), ("ext", cmd_group_ext)):
        p = group.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(handler=handler)

    types = areas.add_parser("type", help="the category TYPES").add_subparsers(dest="command", required=True)
    for name, handler in (("make", cmd_type_make), ("l", cmd_type_l), ("r", cmd_type_r)):
        p = types.add_parser(name)
        p.add_argument("file")
        p.set_defaults(handler=handler)
    p = types.add_parser("homs")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=cmd_type_homs)
    for name, handler in (("lift", cmd_type_lift), ("extend", cmd_type_extend)):
        p = types.add_parser(name)
        p.add_argument("f")
        p.add_argument("g")
        p.set_defaults(handler=handler)

    picard = areas.add_parser("picard", help="skeletal models").add_subparsers(dest="command", required=True)
    p = picard.add_parser("realize")
    p.add_argument("file")
    p.set_defaults(handler=cmd_picard_realize)
    p = picard.add_parser("type-of")
    p.add_argument("model")
    p.set_defaults(handler=cmd_picard_type_of)
    p = picard.add_parser("check")
    p.add_argument("model")
    p.add_argument("--window", type=int, default=None)
    p.set_defaults(handler=cmd_picard_check)
    picard.add_parser("hbar").set_defaults(handler=cmd_picard_hbar)
    for name, handler in (("pi0hom", cmd_picard_pi0hom), ("pi1hom", cmd_picard_pi1hom)):
        p = picard.add_parser(name)
        p.add_argument("s1")
        p.add_argument("s2")
        p.add_argument("--brute-force", action="store_true")
        p.set_defaults(handler=handler)

    verify = areas.add_parser("verify", help="verification suites").add_subparsers(dest="command", required=True)
    for suite in CATALOG_SUITES:
        p = verify.add_parser(suite)
        p.add_argument("--catalog", default="default")
        p.set_defaults(handler=cmd_verify_suite, suite=suite)
    for name, handler in (("projective", cmd_verify_projective), ("injective", cmd_verify_injective)):
        p = verify.add_parser(name)
        p.add_argument("file")
        p.add_argument("--catalog", default="default")
        p.set_defaults(handler=handler)
    p = verify.add_parser("all")
    p.add_argument("--catalog", default="default")
    p.set_defaults(handler=cmd_verify_all)

    envelope = areas.add_parser("envelope", help="projective covers and injective embeddings").add_subparsers(
        dest="command", required=True
    )
    for name, handler in (("cover", cmd_envelope_cover), ("embed", cmd_envelope_embed)):
        p = envelope.add_parser(name)
        p.add_argument("file")
        p.set_defaults(handler=handler)
    p = envelope.add_parser("end-invariants")
    p.add_argument("model")
    p.set_defaults(handler=cmd_envelope_end_invariants)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, dispatch, print the report and return the exit status.
    """
    settings = get_settings()
    logging.basicConfig(level=settings.log_level, stream=sys.stderr)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT

    renderer = TOOL_REGISTRY['report_renderer']
    try:
        report, passed = args.handler(args)
    except (DocumentError, ValueError) as e:
        print(f"picardkit: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except AlgebraError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        print(renderer.run(report=e.to_dict(), format=args.format)["text"])
        return EXIT_FAILURE

    print(renderer.run(report=report, format=args.format)["text"])
    return EXIT_OK if passed else EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(run())
