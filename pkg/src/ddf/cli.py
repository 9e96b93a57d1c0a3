"""Command-line front end: ``ddf validate | elements | invert | roundtrip | verify | demo``.

Exit codes: 0 clean, 1 validation failures, 2 input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .cat_core import check_category
from .corpus import BASES, Corpus, build_corpus
from .double_cat import DoubleCategory, check_double_category
from .elements import check_ddf_morphism, el_functor, el_transformation, is_ddf, is_ddf_via_transpose
from .equivalence import (
    el_module,
    el_multimodulation,
    f_of_multicell,
    f_of_profunctor,
    verify_equivalence,
)
from .errors import DDFError, InvalidInput, ParseError
from .fiber_inverse import f_of_ddf, f_of_morphism
from .interchange import Document, document_from_corpus, emit, parse
from .lax_modules import check_module, check_multimodulation
from .lax_span import check_lax_functor, check_transformation
from .prof_dfib import check_internal_profunctor, check_prof_multicell
from .report import Report

EXIT_OK, EXIT_INVALID, EXIT_INPUT = 0, 1, 2


class InputFailure(Exception):
    """Bad command-line input: unreadable file, unknown entity name."""


def _read(path: str) -> Document:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputFailure(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _guarded(label: str, fn) -> Report:
    """Run a checker, turning precondition failures into a one-line report."""
    try:
        return fn()
    except DDFError as exc:
        rep = Report(label)
        rep.add(type(exc).__name__, str(exc))
        return rep


def validate_document(doc: Document, max_path_len: int | None = None) -> list[tuple[str, Report]]:
    """Run every applicable checker on every entity of ``doc``."""
    out: list[tuple[str, Report]] = []
    checkers = (
        ("categories", check_category),
        ("double_categories", check_double_category),
        ("lax_functors", check_lax_functor),
        ("transformations", check_transformation),
        ("ddfs", _check_ddf),
        ("ddf_morphisms", check_ddf_morphism),
        ("modules", check_module),
        ("multimodulations", lambda mu: check_multimodulation(mu, max_path_len)),
        ("profunctors", check_internal_profunctor),
        ("multicells", check_prof_multicell),
    )
    for section, check in checkers:
        for name, obj in doc.section(section).items():
            label = f"{section}.{name}"
            rep = _guarded(label, lambda c=check, o=obj: c(o))
            rep.subject = label
            out.append((label, rep))
    return out


def _check_ddf(p) -> Report:
    rep = is_ddf(p)
    other = is_ddf_via_transpose(p)
    rep.expect(rep.ok == other.ok, "CharacterizationAgreement", "fibration tests disagree")
    return rep


def corpora_of(doc: Document) -> list[Corpus]:
    """Group the entities of ``doc`` by the base double category they live over."""
    groups = []
    for bname, b in doc.double_categories.items():
        if not any(f.base == b for f in doc.lax_functors.values()) and not any(p.base == b for p in doc.ddfs.values()):
            continue
        groups.append(_corpus_over(doc, bname, b))
    return groups


def _corpus_over(doc: Document, bname: str, b: DoubleCategory) -> Corpus:
    cp = Corpus(bname, b)
    cp.functors = {n: f for n, f in doc.lax_functors.items() if f.base == b}
    cp.transformations = {n: t for n, t in doc.transformations.items() if t.base == b}
    cp.ddfs = {n: p for n, p in doc.ddfs.items() if p.base == b}
    cp.ddf_morphisms = {n: h for n, h in doc.ddf_morphisms.items() if h.src.base == b}
    cp.modules = {n: m for n, m in doc.modules.items() if m.base == b}
    cp.multimodulations = {n: m for n, m in doc.multimodulations.items() if m.base == b}
    cp.profunctors = {n: m for n, m in doc.profunctors.items() if m.base == b}
    cp.multicells = {n: u for n, u in doc.multicells.items() if u.base == b}
    return cp


def _find(doc: Document, name: str, sections: Sequence[str]) -> tuple[str, object]:
    for s in sections:
        if name in doc.section(s):
            return s, doc.section(s)[name]
    raise InputFailure(f"no entity named {name!r} in {', '.join(sections)}")


# verbs ---------------------------------------------------------------------


def _finish(args, reports: list[tuple[str, Report]], verb: str) -> int:
    ok = all(r.ok for _, r in reports)
    if args.json:
        payload = {"command": verb, "ok": ok, "reports": [r.to_dict() for _, r in reports]}
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        for _, r in reports:
            sys.stdout.write(r.summary() + "\n")
        total = sum(r.checked for _, r in reports)
        bad = sum(len(r.violations) for _, r in reports)
        sys.stdout.write(f"{'OK' if ok else 'FAIL'}: {len(reports)} subjects, {total} checks, {bad} violations\n")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_validate(args) -> int:
    doc = _read(args.file)
    return _finish(args, validate_document(doc, args.max_path_len), "validate")


def _emit_result(args, section: str, name: str, obj) -> int:
    doc = Document()
    doc.add(section, name, obj)
    _write(emit(doc), args.output)
    return EXIT_OK


def _invalid(args, exc: InvalidInput | DDFError, label: str) -> int:
    rep = getattr(exc, "report", None)
    if rep is None:
        rep = Report(label)
        rep.add(type(exc).__name__, str(exc))
    rep.subject = label
    sys.stdout.flush()
    if args.json:
        sys.stderr.write(json.dumps({"ok": False, "error": str(exc), "report": rep.to_dict()}, indent=2) + "\n")
    else:
        sys.stderr.write(f"{exc}\n{rep.summary()}\n")
    return EXIT_INVALID


def cmd_elements(args) -> int:
    doc = _read(args.file)
    section, obj = _find(doc, args.functor, ("lax_functors", "transformations", "modules", "multimodulations"))
    name = f"El_{args.functor}"
    try:
        if section == "lax_functors":
            return _emit_result(args, "ddfs", name, el_functor(obj))
        if section == "transformations":
            return _emit_result(args, "ddf_morphisms", name, el_transformation(obj))
        if section == "modules":
            return _emit_result(args, "profunctors", name, el_module(obj))
        if check_multimodulation(obj, args.max_path_len).ok:
            return _emit_result(args, "multicells", name, el_multimodulation(obj, validate=False))
        return _invalid(args, InvalidInput("multimodulation does not validate", check_multimodulation(obj)), name)
    except (InvalidInput, DDFError) as exc:
        return _invalid(args, exc, f"{section}.{args.functor}")


def cmd_invert(args) -> int:
    doc = _read(args.file)
    section, obj = _find(doc, args.ddf, ("ddfs", "ddf_morphisms", "profunctors", "multicells"))
    name = f"F_{args.ddf}"
    try:
        if section == "ddfs":
            return _emit_result(args, "lax_functors", name, f_of_ddf(obj))
        if section == "ddf_morphisms":
            rep = check_ddf_morphism(obj)
            if not rep.ok:
                raise InvalidInput("morphism does not validate", rep)
            return _emit_result(args, "transformations", name, f_of_morphism(obj))
        if section == "profunctors":
            return _emit_result(args, "modules", name, f_of_profunctor(obj))
        return _emit_result(args, "multimodulations", name, f_of_multicell(obj))
    except (InvalidInput, DDFError) as exc:
        return _invalid(args, exc, f"{section}.{args.ddf}")


def cmd_roundtrip(args) -> int:
    doc = _read(args.file)
    if args.base not in doc.double_categories:
        raise InputFailure(f"no double category named {args.base!r}")
    cp = _corpus_over(doc, args.base, doc.double_categories[args.base])
    rep = _guarded(f"roundtrip {args.base}", lambda: verify_equivalence(cp, args.max_path_len))
    return _finish(args, [(args.base, rep)], "roundtrip")


def cmd_verify(args) -> int:
    doc = _read(args.file)
    reports = validate_document(doc, args.max_path_len)
    for cp in corpora_of(doc):
        label = f"equivalence over {cp.base_name}"
        reports.append((label, _guarded(label, lambda c=cp: verify_equivalence(c, args.max_path_len))))
    return _finish(args, reports, "verify")


def cmd_demo(args) -> int:
    doc = document_from_corpus(build_corpus(args.name, seed=args.seed))
    _write(emit(doc), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--max-path-len", type=int, default=None, help="bound on path length in equivariance checks")
    common.add_argument("--seed", type=int, default=None, help="seed for randomly sampled corpus members")
    parser = argparse.ArgumentParser(
        prog="ddf", description="Discrete double fibrations and span-valued lax functors.", parents=[common]
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    p = sub.add_parser("validate", parents=[common], help="run every applicable checker")
    p.add_argument("file", help="document path, or - for stdin")
    p.set_defaults(run=cmd_validate)
    p = sub.add_parser("elements", parents=[common], help="apply the elements construction to an entity")
    p.add_argument("file")
    p.add_argument("--functor", required=True, help="lax functor, transformation, module or multimodulation")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(run=cmd_elements)
    p = sub.add_parser("invert", parents=[common], help="apply the fiber construction to an entity")
    p.add_argument("file")
    p.add_argument("--ddf", required=True, help="fibration, fibration morphism, profunctor or multicell")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(run=cmd_invert)
    p = sub.add_parser("roundtrip", parents=[common], help="unit and counit checks over one base")
    p.add_argument("file")
    p.add_argument("--base", required=True)
    p.set_defaults(run=cmd_roundtrip)
    p = sub.add_parser("verify", parents=[common], help="validators plus the full equivalence report")
    p.add_argument("file")
    p.set_defaults(run=cmd_verify)
    p = sub.add_parser("demo", parents=[common], help="emit a generated corpus")
    p.add_argument("name", choices=sorted(BASES))
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(run=cmd_demo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        _error(args, f"parse error at {exc.location}: {exc.message}", exc.location)
    except InputFailure as exc:
        _error(args, str(exc))
    return EXIT_INPUT


def _error(args, message: str, location: str | None = None) -> None:
    if args.json:
        sys.stderr.write(json.dumps({"ok": False, "error": message, "location": location}) + "\n")
    else:
        sys.stderr.write(f"ddf: {message}\n")


if __name__ == "__main__":
    raise SystemExit(main())
