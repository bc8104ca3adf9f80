"""Command-line surface emitting machine-readable JSON verdicts.

Verbs: validate, corpus, pentactions, pa, analyze, noether, represent,
oracle.  Exit codes: 0 all checks passed, 1 a verified violation (with
witnesses in the JSON), 2 input or format error, 3 enumeration budget
exceeded.  Output is canonical JSON on stdout (--pretty for indentation);
--out additionally writes the same document to a file.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import analysis_report, noether_quotient
from .core import check_axioms
from .errors import BudgetExceededError, InputError, ValidationError
from .files import (
    dumps_canonical,
    emit_corpus,
    load_object,
    parse_object_json,
    pentaction_to_json,
    read_json,
)
from .pentactions import (
    DEFAULT_BUDGET,
    enumerate_pentactions,
    enumerate_pentactions_bruteforce,
)
from .representability import build_pa_object, pa_action, verify_representability

EXIT_PASSED = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _cmd_validate(args) -> tuple[int, dict]:
    name, order, add, act = parse_object_json(read_json(args.file))
    report = check_axioms(order, add, act, require_reduced=True)
    return (EXIT_PASSED if report.passed else EXIT_VIOLATION), report.to_json()


def _cmd_corpus(args) -> tuple[int, dict]:
    written = emit_corpus(args.out_dir)
    return EXIT_PASSED, {"written": written}


def _cmd_pentactions(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    pents = enumerate_pentactions(obj, budget=args.budget)
    return EXIT_PASSED, {
        "object": obj.name,
        "count": len(pents),
        "pentactions": [pentaction_to_json(p) for p in pents],
    }


def _cmd_pa(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    pa = build_pa_object(obj, budget=args.budget)
    payload: dict = {
        "pa_order": len(pa.elements),
        "pa_rgwa": pa.report.to_json(),
        "pa_action": None,
    }
    passed = pa.object is not None and pa.report.passed
    if pa.object is not None:
        action = pa_action(pa)
        payload["pa_action"] = action.report.to_json()
        passed = passed and action.report.passed
    return (EXIT_PASSED if passed else EXIT_VIOLATION), payload


def _cmd_analyze(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    return EXIT_PASSED, analysis_report(obj, budget=args.budget)


def _cmd_noether(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    chain = noether_quotient(obj, budget=args.budget)
    return EXIT_PASSED, {
        "subgroup_orders": [len(w) for w in chain.subgroups],
        "subgroups": [list(w.members) for w in chain.subgroups],
        "quotient_order": chain.quotient.order,
        "quotient_name": chain.quotient.name,
    }


def _cmd_represent(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    report = verify_representability(obj, max_b_order=args.max_order, budget=args.budget)
    return (EXIT_PASSED if report.all_passed else EXIT_VIOLATION), report.to_json()


def _cmd_oracle(args) -> tuple[int, dict]:
    obj = load_object(args.file)
    pruned = enumerate_pentactions(obj, budget=args.budget)
    brute = enumerate_pentactions_bruteforce(obj)
    equal = [p.key() for p in pruned] == [p.key() for p in brute]
    payload = {
        "object": obj.name,
        "count_pruned": len(pruned),
        "count_bruteforce": len(brute),
        "equal": equal,
    }
    return (EXIT_PASSED if equal else EXIT_VIOLATION), payload


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="candidate-visit budget for enumerations")
    common.add_argument("--max-order", type=int, default=3, dest="max_order",
                        help="largest acting-object order for represent")
    common.add_argument("--pretty", action="store_true",
                        help="indent the JSON output")
    common.add_argument("--out", type=str, default=None,
                        help="also write the JSON document to this path")

    parser = argparse.ArgumentParser(
        prog="rgwa",
        description="Finite-model workbench for reduced groups with action.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, handler in (
        ("validate", _cmd_validate),
        ("pentactions", _cmd_pentactions),
        ("pa", _cmd_pa),
        ("analyze", _cmd_analyze),
        ("noether", _cmd_noether),
        ("represent", _cmd_represent),
        ("oracle", _cmd_oracle),
    ):
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("file", help="object file (JSON)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("corpus", parents=[common])
    p.add_argument("out_dir", help="directory receiving the corpus files")
    p.set_defaults(handler=_cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, payload = args.handler(args)
    except ValidationError as exc:
        code, payload = EXIT_VIOLATION, exc.report.to_json()
    except BudgetExceededError as exc:
        code, payload = EXIT_BUDGET, {"error": str(exc)}
    except InputError as exc:
        code, payload = EXIT_INPUT, {"error": str(exc)}
    except OSError as exc:
        code, payload = EXIT_INPUT, {"error": str(exc)}
    text = dumps_canonical(payload, pretty=args.pretty)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return code


if __name__ == "__main__":
    sys.exit(main())
