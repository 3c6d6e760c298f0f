"""Command line interface.

Every subcommand reads fan (and divisor) JSON files, prints deterministic
output to standard out, and uses three exit codes: 0 for success, 1 for
any input or validation problem (reported as an ``{"error", "detail"}``
object on standard error), and 2 when a verification run finds an
inconsistency between the computed and predicted answers.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .corpus import corpus_tasks
from .errors import InvalidInput, ToricError
from .fan import (
    Fan,
    blow_down,
    blow_up,
    fan_from_json,
    fan_to_json,
    minimal_model,
    random_fan,
    self_intersections,
)
from .gluing import (
    GluingRule,
    build_real_complex,
    build_real_complex_from_polytope,
    complex_to_dot,
    complex_to_json,
)
from .homology import (
    euler_from_cells,
    homology,
    predict_theorem,
    report_to_json,
    verify,
)
from .moment import run_moment_checks
from .polytope import (
    divisor_from_json,
    divisor_to_json,
    find_ample,
    intersection_numbers,
    polygon_from_divisor,
)


class _CliError(Exception):
    """Argument-level problem; reported like any other input error."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _CliError(message)


def _load_json(path: str) -> object:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from exc


def _load_fan(path: str) -> Fan:
    return fan_from_json(_load_json(path))


def _emit(obj: object) -> None:
    print(json.dumps(obj))


def _cmd_validate(args) -> int:
    _emit(fan_to_json(_load_fan(args.fan)))
    return 0


def _cmd_classify(args) -> int:
    _emit(report_to_json(verify(_load_fan(args.fan))))
    return 0


def _cmd_verify(args) -> int:
    report = verify(_load_fan(args.fan))
    _emit(report_to_json(report))
    return 0 if report.all_consistent else 2


def _cmd_predict(args) -> int:
    print(str(predict_theorem(_load_fan(args.fan))))
    return 0


def _cmd_selfint(args) -> int:
    _emit(list(self_intersections(_load_fan(args.fan))))
    return 0


def _cmd_surgery(args) -> int:
    fan = _load_fan(args.fan)
    if args.minimal:
        base, steps = minimal_model(fan)
        _emit(
            {
                "rays": fan_to_json(base)["rays"],
                "steps": [
                    {
                        "ray": list(s.ray),
                        "left": list(s.left),
                        "right": list(s.right),
                        "index": s.index,
                    }
                    for s in steps
                ],
            }
        )
        return 0
    if args.blow_up is not None:
        _emit(fan_to_json(blow_up(fan, args.blow_up)))
        return 0
    _emit(fan_to_json(blow_down(fan, args.blow_down)))
    return 0


def _cmd_complex(args) -> int:
    fan = _load_fan(args.fan)
    rule = GluingRule(args.rule)
    if args.divisor is None:
        if rule is GluingRule.AFFINE_SPAN:
            raise _CliError("--rule affine requires --divisor")
        complex_ = build_real_complex(fan)
    else:
        divisor = divisor_from_json(_load_json(args.divisor))
        polygon = polygon_from_divisor(fan, divisor)
        complex_ = build_real_complex_from_polytope(fan, polygon, rule)
    if args.format == "dot":
        sys.stdout.write(complex_to_dot(complex_))
    else:
        _emit(complex_to_json(complex_))
    return 0


def _cmd_gkz_demo(args) -> int:
    fan = _load_fan(args.fan)
    divisor = find_ample(fan)
    polygon = polygon_from_divisor(fan, divisor)
    parallel = build_real_complex_from_polytope(
        fan, polygon, GluingRule.PARALLEL_SUBGROUP
    )
    affine = build_real_complex_from_polytope(fan, polygon, GluingRule.AFFINE_SPAN)
    chi_parallel = euler_from_cells(parallel)
    chi_affine = euler_from_cells(affine)
    agree = parallel == affine
    _emit(
        {
            "divisor": divisor_to_json(divisor)["coeffs"],
            "chi_parallel": chi_parallel,
            "chi_affine": chi_affine,
            "parallel_matches_combinatorial": parallel == build_real_complex(fan),
            "verdict": "rules agree" if agree else "rules disagree",
        }
    )
    return 0


def _cmd_ample(args) -> int:
    fan = _load_fan(args.fan)
    divisor = find_ample(fan)
    _emit(
        {
            "coeffs": divisor_to_json(divisor)["coeffs"],
            "intersection_numbers": list(intersection_numbers(fan, divisor)),
        }
    )
    return 0


def _corpus_line(task: tuple[int, int]) -> dict:
    entry_seed, n = task
    return report_to_json(verify(random_fan(entry_seed, n)))


def _cmd_corpus(args) -> int:
    if args.jobs < 1:
        raise _CliError("--jobs must be at least 1")
    tasks = corpus_tasks(args.seed, args.count, args.max_blowups)
    if args.jobs == 1:
        reports = [_corpus_line(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_corpus_line, tasks, chunksize=8))
    consistent = 0
    for report in reports:
        _emit(report)
        if report["all_consistent"]:
            consistent += 1
    summary = {
        "count": len(reports),
        "consistent": consistent,
        "all_consistent": consistent == len(reports),
    }
    _emit(summary)
    return 0 if summary["all_consistent"] else 2


def _cmd_moment_check(args) -> int:
    fan = _load_fan(args.fan)
    report = run_moment_checks(fan, seed=args.seed, samples=args.samples)
    if not report.signs_exact:
        raise RuntimeError("sign profiles disagreed with the sign vectors")
    _emit(
        {
            "fan": fan_to_json(report.fan)["rays"],
            "divisor": divisor_to_json(report.divisor)["coeffs"],
            "samples": report.samples,
            "max_inequality_violation": report.max_inequality_violation,
            "translation_exact": report.translation_exact,
            "min_mu_separation": report.min_mu_separation,
        }
    )
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="realtoric",
        description=(
            "Topology of the real point set of a smooth complete toric "
            "surface, computed exactly from its fan."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="canonicalize a fan file")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("classify", help="full pipeline, print the report")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("predict", help="surface type from the fan alone")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("verify", help="classify and exit 2 on inconsistency")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selfint", help="self-intersection sequence")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_selfint)

    p = sub.add_parser("surgery", help="blow up, blow down, or minimalize")
    p.add_argument("fan")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--blow-up", type=int, metavar="I")
    group.add_argument("--blow-down", type=int, metavar="I")
    group.add_argument("--minimal", action="store_true")
    p.set_defaults(func=_cmd_surgery)

    p = sub.add_parser("complex", help="glued cell complex as JSON or DOT")
    p.add_argument("fan")
    p.add_argument("--rule", choices=["parallel", "affine"], default="parallel")
    p.add_argument("--divisor", metavar="DIV")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.set_defaults(func=_cmd_complex)

    p = sub.add_parser(
        "gkz-demo", help="compare the correct and affine-span gluing rules"
    )
    p.add_argument("fan")
    p.set_defaults(func=_cmd_gkz_demo)

    p = sub.add_parser("ample", help="construct an ample divisor")
    p.add_argument("fan")
    p.set_defaults(func=_cmd_ample)

    p = sub.add_parser("corpus", help="verify a seeded corpus of random fans")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--max-blowups", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("moment-check", help="numeric moment-map suite")
    p.add_argument("fan")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=256)
    p.set_defaults(func=_cmd_moment_check)

    return parser


def run(argv: Sequence[str]) -> int:
    """Parse and execute one command line; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        return args.func(args)
    except _CliError as exc:
        print(json.dumps({"error": "Usage", "detail": str(exc)}), file=sys.stderr)
        return 1
    except ToricError as exc:
        print(
            json.dumps({"error": exc.code, "detail": str(exc)}), file=sys.stderr
        )
        return 1
    except ValueError as exc:
        print(
            json.dumps({"error": "InvalidInput", "detail": str(exc)}),
            file=sys.stderr,
        )
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
