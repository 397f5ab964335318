"""Command-line interface.

Exit codes: 0 success, 1 a requested check failed, 2 bad usage or input.
All numbers are printed exactly.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import ansatz, markov, tableau_a, tableau_b, verify
from .kernel import BACKEND
from .poly import ParamPoint
from .state import State
from .symbols import InsertionEvent, Label, parse_label_set

# Rough single-core costs with the compiled kernel, used to pick the caps:
#   type A size 6: 2,949,120 tableaux, ~5 s to enumerate
#   type B size 5: 967,680 half tableaux, ~3 s
MAX_SIZE_A = 6
MAX_SIZE_B = 5


class UsageError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc


def _load_tableau(args):
    text = _read(args.tableau)
    try:
        if args.type_b:
            H = tableau_b.HalfTableauB.parse(text)
            if not tableau_b.validate_b(H):
                raise UsageError(f"invalid type-B tableau: {tableau_b.violations_b(H)}")
            return H
        T = tableau_a.StaircaseTableau.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not tableau_a.validate(T):
        raise UsageError("invalid tableau: " + "; ".join(f"{v.rule} at {v.cell}" for v in tableau_a.violations(T)))
    return T


def _check_size(size: int, cap: int, flag_cap: int | None) -> None:
    limit = cap if flag_cap is None else flag_cap
    if size < 0:
        raise UsageError("size must be non-negative")
    if size > limit:
        raise UsageError(f"size {size} exceeds --max-size {limit}")


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


# -- commands ---------------------------------------------------------------


def cmd_enumerate(args, out: TextIO) -> int:
    cap = MAX_SIZE_B if args.type_b else MAX_SIZE_A
    _check_size(args.size, cap, args.max_size)
    try:
        labels = parse_label_set(args.labels)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.type_b:
        if args.count:
            out.write(f"{tableau_b.count_b(args.size, labels)}\n")
            return 0
        items = tableau_b.enumerate_b(args.size, labels)
    else:
        if args.count:
            out.write(f"{tableau_a.count(args.size, labels)}\n")
            return 0
        items = tableau_a.enumerate_tableaux(args.size, labels)
    for k, T in enumerate(items):
        if k:
            out.write("\n")
        out.write(T.to_text() + "\n")
    return 0


def cmd_weight(args, out: TextIO) -> int:
    if args.state is not None:
        try:
            m = State.parse(args.state)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        w = ansatz.weight_of_state_b(m) if args.type_b else ansatz.weight_of_state(m)
    elif args.tableau is not None:
        T = _load_tableau(args)
        w = tableau_b.weight_b(T) if args.type_b else tableau_a.weight(T)
    else:
        raise UsageError("weight needs a tableau or --state")
    out.write((w.to_json() if args.json else str(w)) + "\n")
    return 0


def cmd_type(args, out: TextIO) -> int:
    T = _load_tableau(args)
    m = tableau_b.type_of_b(T) if args.type_b else tableau_a.type_of(T)
    out.write(f"{m}\n")
    return 0


def cmd_insert(args, out: TextIO) -> int:
    T = _load_tableau(args)
    try:
        e = InsertionEvent.parse(args.event)
        T2 = tableau_b.insert_b(T, e) if args.type_b else tableau_a.insert(T, e)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(T2.to_text() + "\n")
    return 0


def cmd_uninsert(args, out: TextIO) -> int:
    T = _load_tableau(args)
    try:
        T0, e = tableau_b.uninsert_b(T) if args.type_b else tableau_a.uninsert(T)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out.write(f"event: {e}\n")
    out.write(T0.to_text() + "\n")
    return 0


def cmd_invtable(args, out: TextIO) -> int:
    if args.decode:
        try:
            table = tableau_a.ColoredInversionTable.from_json(_read(args.tableau))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad inversion table: {exc}") from exc
        out.write(tableau_a.from_inversion_table(table).to_text() + "\n")
        return 0
    args.type_b = False
    T = _load_tableau(args)
    table = tableau_a.to_inversion_table(T)
    if not args.stats:
        out.write(table.to_json() + "\n")
        return 0
    labels = table.labels_used()
    stats = {"table": table.to_json_obj(), "q_degree": tableau_a.q_degree(T)}
    if labels <= {Label.ALPHA, Label.BETA}:
        stats["q_stat_gd0"] = tableau_a.q_stat_gd0(table)
    if labels <= {Label.BETA, Label.GAMMA}:
        stats["q_stat_ad0"] = tableau_a.q_stat_ad0(table)
    _dump(stats, out)
    return 0


def _point(args) -> ParamPoint:
    try:
        return ParamPoint(args.alpha, args.beta, args.gamma, args.delta, args.q, args.u)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad parameter: {exc}") from exc


def cmd_stationary(args, out: TextIO) -> int:
    _check_size(args.size, MAX_SIZE_A, args.max_size)
    if args.size < 1:
        raise UsageError("size must be at least 1")
    pt = _point(args)
    try:
        pt.check_probabilities()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    result = {}
    try:
        if args.method in ("tableaux", "both"):
            result["tableaux"] = ansatz.stationary_tableaux(args.size, pt).to_json_obj()
        if args.method in ("markov", "both"):
            result["markov"] = markov.stationary_exact(markov.transition_matrix(args.size, pt)).to_json_obj()
    except (ZeroDivisionError, markov.SolverError) as exc:
        out.write(json.dumps({"error": str(exc)}) + "\n")
        return 1
    if args.method == "both":
        result["equal"] = result["tableaux"] == result["markov"]
        _dump(result, out)
        return 0 if result["equal"] else 1
    _dump(result[args.method], out)
    return 0


def cmd_verify(args, out: TextIO) -> int:
    if args.suite == "all":
        reports = verify.run_all(args.max_size)
    else:
        reports = [verify.run_suite(args.suite, args.max_size)]
    body = [r.to_json_obj() for r in reports]
    _dump(body[0] if len(body) == 1 else body, out)
    return 0 if all(r.ok for r in reports) else 1


def cmd_render(args, out: TextIO) -> int:
    T = _load_tableau(args)
    if args.type_b and args.full:
        T = tableau_b.expand_to_full(T)
    elif args.type_b and args.fill:
        raise UsageError("--fill on a type-B tableau needs --full")
    out.write((tableau_a.fill(T).to_text() if args.fill else T.to_text()) + "\n")
    return 0


# -- parser -----------------------------------------------------------------


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="staircase", description="Staircase tableaux and the exclusion process.")
    parser.add_argument("--backend", action="store_true", help="print the active kernel backend and exit")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def tableau_arg(p, required=True):
        p.add_argument("tableau", nargs=None if required else "?", help="tableau file, or - for stdin")
        p.add_argument("--type-b", action="store_true", help="read a type-B half tableau")

    p = sub.add_parser("enumerate", help="list or count tableaux of a size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--labels", help="restrict to these labels, e.g. ad")
    p.add_argument("--type-b", action="store_true")
    p.add_argument("--max-size", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("weight", help="weight of a tableau or of a state")
    tableau_arg(p, required=False)
    p.add_argument("--state", help="state word over b/w (or •/∘)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("type", help="state read off the diagonal")
    tableau_arg(p)
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("insert", help="apply one insertion event")
    tableau_arg(p)
    p.add_argument("--event", required=True, help="a letter like a, or a triple like a,b,2")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("uninsert", help="undo the last insertion")
    tableau_arg(p)
    p.set_defaults(func=cmd_uninsert)

    p = sub.add_parser("invtable", help="coloured inversion table of a tableau")
    p.add_argument("tableau", help="tableau file (or table JSON with --decode), - for stdin")
    p.add_argument("--decode", action="store_true", help="read a table and print its tableau")
    p.add_argument("--stats", action="store_true", help="include q-statistics where defined")
    p.set_defaults(func=cmd_invtable)

    p = sub.add_parser("stationary", help="exact stationary distribution")
    p.add_argument("--size", type=int, required=True)
    for name in ("alpha", "beta", "gamma", "delta", "q", "u"):
        p.add_argument(f"--{name}", type=_fraction, required=True)
    p.add_argument("--method", choices=("tableaux", "markov", "both"), default="tableaux")
    p.add_argument("--max-size", type=int)
    p.set_defaults(func=cmd_stationary)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=(*verify.SUITES, "all"))
    p.add_argument("--max-size", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="print a tableau")
    tableau_arg(p)
    p.add_argument("--fill", action="store_true", help="show q/u in empty cells")
    p.add_argument("--full", action="store_true", help="type B: show the full symmetric tableau")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.backend:
        out.write(BACKEND + "\n")
        return 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    if getattr(args, "max_size", None) is not None and args.max_size < 0:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"staircase {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
