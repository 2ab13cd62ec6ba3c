"""Command line interface.

Commands:
  gen       enumerate Cayley tables of a given order
  analyze   full ideal / primitive / topology report for one semigroup
  pullback  transport primitive ideals along a homomorphism file
  check     proposition sweep over every semigroup up to an order
  dot       DOT export of the specialization order or closed-set lattice

Table arguments accept a file path or @name for a registry example.
Exit codes: 0 success, 1 proposition violation, 2 usage or input error.
Environment: PRIMSPACE_BUDGET overrides the action-search budget,
PRIMSPACE_MAX_ORDER raises the enumeration order bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checks import analyze_semigroup, run_sweep
from .core import MAX_ENUM_ORDER, enumerate_semigroups
from .errors import (
    ComponentMismatchError,
    PrimspaceError,
    UniqueGenericPointViolationError,
)
from .primitive import DEFAULT_MAXDIM, DEFAULT_PRIMES, default_catalog, search_primitives
from .registry import names
from .reports import (
    analysis_to_json,
    analysis_to_text,
    continuity_to_json,
    continuity_to_text,
    sweep_to_json,
    sweep_to_text,
)
from .tableio import (
    SCHEMA_VERSION,
    format_table_text,
    load_hom,
    load_semigroup,
    table_to_json,
)
from .topology import (
    StructureSpace,
    closed_lattice_dot,
    pullback_continuity_check,
    specialization_dot,
)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _env_budget() -> int | None:
    v = os.environ.get("PRIMSPACE_BUDGET")
    return int(v) if v else None


def _env_max_order() -> int:
    v = os.environ.get("PRIMSPACE_MAX_ORDER")
    return int(v) if v else MAX_ENUM_ORDER


def _parse_primes(text: str):
    try:
        primes = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")
    if not primes:
        raise argparse.ArgumentTypeError("empty prime list")
    return primes


def _bounds(args):
    return default_catalog(args.primes, args.maxdim)


def cmd_gen(args) -> int:
    dedup = "up_to_iso_and_anti_iso" if args.dedup else "none"
    tables = list(
        enumerate_semigroups(args.order, dedup=dedup, max_order=_env_max_order())
    )
    if args.format == "json":
        payload = {
            "schema": SCHEMA_VERSION,
            "order": args.order,
            "dedup": dedup,
            "count": len(tables),
            "tables": [table_to_json(sg)["table"] for sg in tables],
        }
        _emit(_json_dump(payload), args.out)
    else:
        chunks = [
            format_table_text(sg, name=str(i)) for i, sg in enumerate(tables)
        ]
        chunks.append(f"# count: {len(tables)}\n")
        _emit("\n".join(chunks), args.out)
    return 0


def cmd_analyze(args) -> int:
    sg = load_semigroup(args.table)
    analysis = analyze_semigroup(sg, _bounds(args), _env_budget())
    if args.format == "json":
        _emit(_json_dump(analysis_to_json(analysis)), args.out)
    else:
        _emit(analysis_to_text(analysis), args.out)
    return 0 if analysis.all_passed else 1


def cmd_pullback(args) -> int:
    hom = load_hom(args.hom)
    bounds = _bounds(args)
    budget = _env_budget()
    src_space = StructureSpace.from_report(
        hom.source, search_primitives(hom.source, bounds, budget)
    )
    tgt_space = StructureSpace.from_report(
        hom.target, search_primitives(hom.target, bounds, budget)
    )
    report = pullback_continuity_check(hom, src_space, tgt_space)
    if args.format == "json":
        _emit(_json_dump(continuity_to_json(report, hom)), args.out)
    else:
        _emit(continuity_to_text(report, hom), args.out)
    # a non-transporting point is an honest outcome; a failed continuity
    # identity on fully transported points is a proposition violation
    if report.preimages_closed is False or report.hull_identity is False:
        return 1
    return 0


def cmd_check(args) -> int:
    report = run_sweep(
        args.order,
        dedup="up_to_iso_and_anti_iso" if args.dedup else "none",
        bounds=_bounds(args),
        budget=_env_budget(),
        jobs=args.jobs,
        max_enum_order=_env_max_order(),
    )
    if args.format == "json":
        _emit(_json_dump(sweep_to_json(report)), args.out)
    else:
        _emit(sweep_to_text(report), args.out)
    return 0 if report.ok else 1


def cmd_dot(args) -> int:
    sg = load_semigroup(args.table)
    space = StructureSpace.from_report(
        sg, search_primitives(sg, _bounds(args), _env_budget())
    )
    if args.what == "specialization":
        _emit(specialization_dot(space), args.out)
    else:
        _emit(closed_lattice_dot(space), args.out)
    return 0


def _add_bounds_flags(sp) -> None:
    sp.add_argument(
        "--primes",
        type=_parse_primes,
        default=DEFAULT_PRIMES,
        help="comma-separated module primes (default 2,3,5)",
    )
    sp.add_argument(
        "--maxdim",
        type=int,
        default=DEFAULT_MAXDIM,
        help="largest module dimension searched (default 2)",
    )


def _add_output_flags(sp) -> None:
    sp.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sp.add_argument("--out", default=None, help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primspace",
        description="Ideals, primitive ideals, and structure spaces of "
        "finite semigroups",
        epilog=f"registry examples: {', '.join('@' + n for n in names())}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", help="enumerate Cayley tables of one order")
    sp.add_argument("--order", type=int, required=True)
    sp.add_argument(
        "--dedup",
        action="store_true",
        help="only canonical representatives up to isomorphism and "
        "anti-isomorphism",
    )
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("analyze", help="full report for one semigroup")
    sp.add_argument("table", help="table file or @name")
    _add_bounds_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser(
        "pullback", help="transport primitive ideals along a homomorphism"
    )
    sp.add_argument("hom", help="homomorphism JSON file")
    _add_bounds_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_pullback)

    sp = sub.add_parser("check", help="proposition sweep up to an order")
    sp.add_argument("--order", type=int, default=3, help="largest order swept")
    sp.add_argument(
        "--dedup",
        action="store_true",
        help="sweep canonical representatives instead of all labeled tables",
    )
    sp.add_argument("--jobs", type=int, default=1, help="parallel search workers")
    _add_bounds_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dot", help="DOT export of the structure space")
    sp.add_argument("table", help="table file or @name")
    sp.add_argument(
        "--what",
        choices=("specialization", "closed_lattice"),
        default="specialization",
    )
    _add_bounds_flags(sp)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_dot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UniqueGenericPointViolationError, ComponentMismatchError) as exc:
        print(f"proposition violation: {exc}", file=sys.stderr)
        return 1
    except PrimspaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
