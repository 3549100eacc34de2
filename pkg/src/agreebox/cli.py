"""Command-line front end.

Subcommands:
    classify          box JSON -> classification verdict JSON
    generate          family + params -> box JSON (warnings to stderr)
    sweep             family + grid -> CSV of disagreement/locality columns
    reduce            box JSON -> effective 2x2 box + reduction plan JSON
    ontology          box JSON -> instruction-set model JSON (flags signed)
    verify-classical  exhaustive small-model agreement check -> report JSON

Exit codes: 0 success, 2 parse error, 3 validation or precondition error,
4 budget exceeded, 1 anything unexpected.
"""

import argparse
import csv
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .boxes import box_doc, box_from_json, box_to_json, validate
from .bridge import DEFAULT_BUDGET, box_to_model, is_local
from .classical import model_to_json, verify_agreement_theorem
from .classify import classify, tsirelson_obstruction, verdict_to_json
from .epistemic import detect_ccd, report_doc
from .errors import (
    AgreeboxError,
    BudgetError,
    ParseError,
    PreconditionError,
    ReductionRefused,
    ShapeError,
    StructuralError,
)
from .families import caption_violations, ccd_table_box, pr_box, sd_table_box, uniform_box
from .rationals import rat, rat_dec, rat_str
from .reduction import classify_general, plan_doc, reduce_box

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_BUDGET = 4


def _read_text(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path, text):
    if path is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _load_box(path):
    box = box_from_json(_read_text(path))
    result = validate(box)
    if result.structural:
        raise StructuralError("; ".join(result.structural))
    if not result.ok:
        raise PreconditionError(
            "box is not a valid no-signaling box: " + "; ".join(result.violations)
        )
    return box


def _parse_params(text):
    """Parse "r=1/2,s=0.25" into a name -> Fraction dict."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"bad parameter {item!r}, expected name=value")
        name, value = item.split("=", 1)
        out[name.strip()] = rat(value)
    return out


def _parse_grid(text):
    """Parse "r=0:1:1/4,s=1/2" into a name -> list of Fractions dict.

    A singleton "name=value" is a one-point axis; "start:stop:step" is an
    inclusive range walked exactly.
    """
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise ParseError(f"bad grid axis {item!r}")
        name, axis = item.split("=", 1)
        if ":" in axis:
            pieces = axis.split(":")
            if len(pieces) != 3:
                raise ParseError(f"bad range {axis!r}, expected start:stop:step")
            start, stop, step = (rat(p) for p in pieces)
            if step <= 0:
                raise ParseError("grid step must be positive")
            values = []
            v = start
            while v <= stop:
                values.append(v)
                v += step
            out[name.strip()] = values
        else:
            out[name.strip()] = [rat(axis)]
    return out


# ---------------------------------------------------------------------------
# subcommands

def _cmd_classify(args):
    box = _load_box(args.input)
    if (box.nA, box.nB, box.nX, box.nY) == (2, 2, 2, 2):
        verdict = classify(box, relabel_search=args.relabel_search, budget=args.budget)
    else:
        verdict = classify_general(
            box, relabel_search=args.relabel_search, budget=args.budget
        )
    _write_text(args.output, verdict_to_json(verdict))
    return EXIT_OK


def _family_box(family, params):
    if family == "pr":
        return pr_box(), []
    if family == "uniform":
        return uniform_box(), []
    needed = {"r", "s", "t", "u"}
    missing = needed - set(params)
    if missing:
        raise ParseError(f"family {family!r} needs parameters {sorted(missing)}")
    r, s, t, u = params["r"], params["s"], params["t"], params["u"]
    maker = ccd_table_box if family == "ccd" else sd_table_box
    return maker(r, s, t, u), caption_violations(family, r, s, t, u)


def _cmd_generate(args):
    params = _parse_params(args.params)
    box, warnings = _family_box(args.family, params)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    result = validate(box)
    if not result.ok:
        for v in result.violations:
            print(f"warning: {v}", file=sys.stderr)
    _write_text(args.output, box_to_json(box))
    return EXIT_OK


SWEEP_COLUMNS = [
    "family",
    "r", "r_dec", "s", "s_dec", "t", "t_dec", "u", "u_dec",
    "qA", "qA_dec", "qB", "qB_dec",
    "ccd", "sd", "local", "gap", "gap_dec",
]


def _sweep_rows(family, tuples, budget):
    skipped = 0
    for r, s, t, u in tuples:
        if family in ("ccd", "sd"):
            box, _ = _family_box(family, {"r": r, "s": s, "t": t, "u": u})
        else:
            box, _ = _family_box(family, {})
        if not validate(box).ok:
            skipped += 1
            continue
        report = detect_ccd(box)
        h = report.hierarchy
        gap = tsirelson_obstruction(box)
        row = {
            "family": family,
            "ccd": str(report.ccd).lower(),
            "sd": str(report.sd).lower(),
            "local": str(is_local(box, budget).local).lower(),
        }
        for name, value in (("r", r), ("s", s), ("t", t), ("u", u)):
            row[name] = rat_str(value) if value is not None else ""
            row[name + "_dec"] = rat_dec(value) if value is not None else ""
        row["qA"] = rat_str(h.qA.value) if h.qA.defined else ""
        row["qA_dec"] = rat_dec(h.qA.value) if h.qA.defined else ""
        row["qB"] = rat_str(h.qB.value) if h.qB.defined else ""
        row["qB_dec"] = rat_dec(h.qB.value) if h.qB.defined else ""
        row["gap"] = rat_str(gap) if gap is not None else ""
        row["gap_dec"] = rat_dec(gap) if gap is not None else ""
        yield row
    if skipped:
        print(f"note: skipped {skipped} grid points with invalid boxes", file=sys.stderr)


def _cmd_sweep(args):
    if args.family in ("ccd", "sd"):
        if args.sample is not None:
            rng = random.Random(args.seed)
            seen = set()
            while len(seen) < args.sample:
                seen.add(tuple(Fraction(rng.randrange(0, 9), 8) for _ in range(4)))
            tuples = sorted(seen)
        else:
            if not args.grid:
                raise ParseError("sweep over ccd/sd needs --grid or --sample")
            grid = _parse_grid(args.grid)
            missing = {"r", "s", "t", "u"} - set(grid)
            if missing:
                raise ParseError(f"grid is missing axes {sorted(missing)}")
            tuples = [
                (r, s, t, u)
                for r in grid["r"]
                for s in grid["s"]
                for t in grid["t"]
                for u in grid["u"]
            ]
    else:
        tuples = [(None, None, None, None)]

    out = sys.stdout if args.output is None else open(args.output, "w", newline="")
    try:
        writer = csv.DictWriter(out, fieldnames=SWEEP_COLUMNS)
        writer.writeheader()
        for row in _sweep_rows(args.family, tuples, args.budget):
            writer.writerow(row)
    finally:
        if args.output is not None:
            out.close()
    return EXIT_OK


def _cmd_reduce(args):
    box = _load_box(args.input)
    mode = args.mode
    if mode == "auto":
        report = detect_ccd(box)
        if report.ccd:
            mode = "ccd"
        elif report.sd:
            mode = "sd"
        else:
            raise ReductionRefused("box carries neither disagreement", report)
    reduced, plan = reduce_box(box, mode)
    doc = {"box": box_doc(reduced), "plan": plan_doc(plan)}
    _write_text(args.output, json.dumps(doc, indent=2))
    return EXIT_OK


def _cmd_ontology(args):
    box = _load_box(args.input)
    model = box_to_model(box, budget=args.budget)
    _write_text(args.output, model_to_json(model))
    return EXIT_OK


def _cmd_verify_classical(args):
    params = _parse_params(args.params) if args.params else {}
    omega = int(params.get("omega", 4))
    denom = int(params.get("denom", 3))
    report = verify_agreement_theorem(omega, denom)
    doc = {
        "bound_omega": report.bound_omega,
        "denominator_bound": report.denominator_bound,
        "instances": report.instances,
        "certainty_instances": report.certainty_instances,
        "violations": report.violations,
        "complete": report.complete,
        "max_iterations": report.max_iterations,
    }
    _write_text(args.output, json.dumps(doc, indent=2))
    if report.violations:
        return EXIT_UNEXPECTED
    if not report.complete:
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="agreebox",
        description="agreement and disagreement analysis for no-signaling boxes",
    )
    parser.add_argument("--version", action="version", version=f"agreebox {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, input_required=True):
        if input_required:
            p.add_argument("--input", required=True, help="path to a box JSON file")
        p.add_argument("--output", default=None, help="output path (default stdout)")
        p.add_argument(
            "--budget", type=int, default=DEFAULT_BUDGET,
            help="instruction-state budget for exact LP work",
        )

    p = sub.add_parser("classify", help="classify a box")
    add_common(p)
    p.add_argument(
        "--relabel-search", action="store_true",
        help="search input/output relabelings for a matching canonical frame",
    )
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("generate", help="emit a family box as JSON")
    p.add_argument("--family", required=True, choices=["ccd", "sd", "pr", "uniform"])
    p.add_argument("--params", default="", help='e.g. "r=1/2,s=1/4,t=1/2,u=0"')
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("sweep", help="sweep a family and emit CSV")
    p.add_argument("--family", required=True, choices=["ccd", "sd", "pr", "uniform"])
    p.add_argument("--grid", default="", help='e.g. "r=0:1:1/4,s=0:1:1/4,t=1/2,u=0"')
    p.add_argument("--sample", type=int, default=None,
                   help="draw this many random parameter tuples instead of a grid")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample")
    p.add_argument("--output", default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("reduce", help="reduce a many-output box to 2x2")
    add_common(p)
    p.add_argument("--mode", choices=["ccd", "sd", "auto"], default="auto")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("ontology", help="instruction-set model for a box")
    add_common(p)
    p.set_defaults(func=_cmd_ontology)

    p = sub.add_parser("verify-classical", help="exhaustive small-model agreement check")
    p.add_argument("--params", default="", help='bounds, e.g. "omega=4,denom=3"')
    p.add_argument("--output", default=None)
    p.set_defaults(func=_cmd_verify_classical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ReductionRefused as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(json.dumps(report_doc(exc.report), indent=2), file=sys.stderr)
        return EXIT_VALIDATION
    except (ParseError, StructuralError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, ShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except AgreeboxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
