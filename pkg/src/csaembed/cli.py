"""Command-line front end.

Every command reads one JSON document (a file path, or stdin when the path is
omitted or ``-``) and writes a JSON or text report. Exit status is 0 for an
affirmative verdict, 1 for a negative verdict and 2 for malformed input.

Characteristic polynomials are given by their factorisation profile only;
the tool never factors polynomials itself.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable

from . import __version__
from .brauer import capacity, index, validate_csa, validate_profile
from .charpoly import charpoly_admissible_global, charpoly_admissible_local
from .embed import embedding_exists, global_targets, hom_exists
from .errors import CSAEmbedError, NonIntegralN
from .hasse import GLOBAL_EMBEDDING, construct_counterexample, hasse_verdict
from .orbits import FINITE, orbit_count_semisimple_target
from .schema import (
    SCHEMA_VERSION,
    SchemaError,
    charpoly_to_json,
    csa_to_json,
    dumps,
    loads,
    parse_csa,
    parse_polynomial,
    parse_profile,
    parse_source_factor,
    parse_wedderburn,
    profile_to_json,
    verdict_to_json,
    _get,
)
from .selftest import run_agreement

OK, NEGATIVE, INPUT_ERROR = 0, 1, 2


def _read(path: str | None) -> Any:
    if path in (None, "-"):
        return loads(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc.strerror}") from exc


def _targets(doc: Any) -> tuple[list, bool]:
    """Abstract-mode targets (one object or ``{"targets": [...]}``) or
    global mode (``{"target": GlobalCSA, "sources": [...]}``)."""
    if isinstance(doc, dict) and "target" in doc:
        B = parse_csa(_get(doc, "target", "$", dict), "$.target")
        sources = [
            parse_source_factor(s, f"$.sources[{i}]") for i, s in enumerate(_get(doc, "sources", "$", list))
        ]
        if not sources:
            raise SchemaError("$.sources: at least one source factor is required")
        return global_targets(B, sources), False
    infinite = _get(doc, "base_field_infinite", "$", bool, True)
    if isinstance(doc, dict) and "targets" in doc:
        raw = _get(doc, "targets", "$", list)
        if not raw:
            raise SchemaError("$.targets: at least one target is required")
        return [parse_wedderburn(t, f"$.targets[{j}]") for j, t in enumerate(raw)], infinite
    return [parse_wedderburn(doc)], infinite


def _feasibility(result) -> dict:
    return {
        "feasible": result.feasible,
        "witness": None if result.witness is None else [list(x) for x in result.witness],
    }


def cmd_hom_check(args) -> tuple[int, dict]:
    targets, _ = _targets(_read(args.input))
    result = hom_exists(targets)
    return (OK if result.feasible else NEGATIVE), _feasibility(result)


def cmd_embed_check(args) -> tuple[int, dict]:
    targets, _ = _targets(_read(args.input))
    result = embedding_exists(targets)
    return (OK if result.feasible else NEGATIVE), _feasibility(result)


def cmd_orbit_count(args) -> tuple[int, dict]:
    targets, infinite = _targets(_read(args.input))
    result = orbit_count_semisimple_target(targets, infinite)
    report = {"status": result.status, "count": result.count}
    return (OK if result.status == FINITE else NEGATIVE), report


def cmd_hasse_check(args) -> tuple[int, dict]:
    doc = _read(args.input)
    A = parse_csa(_get(doc, "algebra", "$", dict), "$.algebra")
    K = parse_profile(_get(doc, "field", "$", dict), "$.field")
    verdict = hasse_verdict(A, K, enumerate=args.enumerate)
    return (OK if verdict.status == GLOBAL_EMBEDDING else NEGATIVE), verdict_to_json(verdict)


def cmd_charpoly_check(args) -> tuple[int, dict]:
    doc = _read(args.input)
    n = _get(doc, "n", "$", int)
    f = parse_polynomial(doc)
    if "delta" in doc:
        Delta = parse_csa(_get(doc, "delta", "$", dict), "$.delta")
        try:
            report = charpoly_admissible_global(f, Delta, n)
        except NonIntegralN as exc:
            return NEGATIVE, {"admissible": False, "reason": str(exc), "factors": []}
    else:
        d = _get(doc, "d", "$", int)
        report = charpoly_admissible_local([(x.degree, x.multiplicity) for x in f.factors], d, n)
    return (OK if report.admissible else NEGATIVE), charpoly_to_json(report)


def _factorization(text: str) -> list[tuple[int, int]]:
    try:
        pairs = [item.split(",") for item in text.split(":")]
        return [(int(p), int(e)) for p, e in pairs]
    except ValueError as exc:
        raise SchemaError(f"--delta expects 'p,e:p,e:...', got {text!r}") from exc


def cmd_construct(args) -> tuple[int, dict]:
    Delta, K = construct_counterexample(args.k, _factorization(args.delta))
    verdict = hasse_verdict(Delta, K, enumerate=args.enumerate)
    report = {"algebra": csa_to_json(Delta), "field": profile_to_json(K), "verdict": verdict_to_json(verdict)}
    return (OK if verdict.status == GLOBAL_EMBEDDING else NEGATIVE), report


def cmd_validate(args) -> tuple[int, dict]:
    doc = _read(args.input)
    if isinstance(doc, dict) and "splitting" in doc:
        K = parse_profile(doc)
        validate_profile(K)
        return OK, {"valid": True, "kind": "ExtensionProfile", "degree": K.degree}
    A = parse_csa(doc)
    validate_csa(A)
    return OK, {"valid": True, "kind": "GlobalCSA", "degree": A.degree, "index": index(A), "capacity": capacity(A)}


def cmd_selftest(args) -> tuple[int, dict]:
    summary = run_agreement(args.seed, args.trials)
    report = {
        "seed": summary.seed,
        "trials": summary.trials,
        "disagreements": len(summary.disagreements),
        "global_embeddings": summary.embeddings,
        "hasse_failures": summary.hasse_failures,
        "local_obstructions": summary.local_obstructions,
    }
    return (OK if summary.ok else NEGATIVE), report


def _text(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(obj)}")
    return lines


def _scalar(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[]"
    return str(value)


COMMANDS: dict[str, tuple[Callable, str]] = {
    "hom-check": (cmd_hom_check, "does some algebra homomorphism A -> B exist"),
    "embed-check": (cmd_embed_check, "does some algebra embedding A -> B exist"),
    "orbit-count": (cmd_orbit_count, "count B^x-conjugacy classes of homomorphisms A -> B"),
    "hasse-check": (cmd_hasse_check, "local-global analysis for embedding a field into a CSA"),
    "charpoly-check": (cmd_charpoly_check, "is a factored polynomial a characteristic polynomial of Mat_n(Δ)"),
    "construct-counterexample": (cmd_construct, "build a pair violating the Hasse principle"),
    "validate": (cmd_validate, "check a GlobalCSA or ExtensionProfile document"),
    "selftest": (cmd_selftest, "randomised obstruction-vs-capacity agreement check"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csaembed", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"csaembed {__version__} (schema {SCHEMA_VERSION})")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("construct-counterexample",):
            p.add_argument("--k", type=int, required=True, help="degree of the field")
            p.add_argument("--delta", required=True, help="factorisation of the degree, e.g. 2,1:3,1")
        elif name == "selftest":
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--trials", type=int, default=200)
        else:
            p.add_argument("input", nargs="?", help="JSON input file (default: stdin)")
        if name in ("hasse-check", "construct-counterexample"):
            p.add_argument("--enumerate", action="store_true", help="list local solution vectors")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        status, report = handler(args)
    except CSAEmbedError as exc:
        status, report = INPUT_ERROR, {"error": exc.code, "message": str(exc)}
    except ValueError as exc:
        status, report = INPUT_ERROR, {"error": "SchemaError", "message": str(exc)}
    if args.format == "text":
        out = "\n".join(_text(report))
    else:
        out = dumps(report)
    print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
