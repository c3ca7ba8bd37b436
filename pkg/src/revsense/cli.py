"""Command-line front door.

Subcommands:

* gen      -- emit a family string (optionally reversed) in either
              serialization.
* measure  -- print measure=value lines for a family string or a file.
* sweep    -- run a parameter sweep and write the CSV table.
* verify   -- check closed-form predictions against direct computation.
* show     -- render the sorted rotation matrix or a parse listing.

Exit codes: 0 success, 2 usage/parameter error, 3 unknown measure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import textio
from .bwt import bbwt, bwt
from .families import FAMILIES, FamilySpec, generate
from .harness import (
    DEFAULT_NODE_BUDGET,
    MEASURE_IDS,
    _MeasureRunner,
    rows_to_csv,
    sweep,
    verify,
)
from .lexparse import lex_parse
from .lz import Parsing, lz_end_greedy, lz_no_overlap, lz_parse
from .suffixes import cyclic_rotation_order
from .text import Text, reverse

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNKNOWN_MEASURE = 3
EXIT_VERIFY_FAILED = 4

SHOW_CAP = 200

# reduced grids exercising every family that carries predictions
QUICK_GRIDS: dict[str, list[int | None]] = {
    "u_k": list(range(1, 13)),
    "u_k_rev": list(range(1, 13)),
    "T_p": list(range(1, 7)),
    "T_p_rev": list(range(2, 7)),
    "w_sigma": list(range(2, 21, 2)),
    "w_sigma_rev": list(range(2, 21, 2)),
    "c_fib_rev": list(range(9, 16, 2)),
    "fib_plus": list(range(8, 15, 2)),
    "unary_plus": list(range(2, 51)),
    "unary_plus_rev": list(range(2, 51)),
    "t55": [None],
    "t55_rev": [None],
}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _parse_range(spec: str) -> list[int]:
    parts = spec.split(":")
    if len(parts) not in (2, 3) or not all(p.lstrip("-").isdigit() for p in parts):
        raise CliError(f"bad range {spec!r}; expected A:B or A:B:STEP")
    a, b = int(parts[0]), int(parts[1])
    step = int(parts[2]) if len(parts) == 3 else 1
    if step < 1 or b < a:
        raise CliError(f"bad range {spec!r}; need A <= B and STEP >= 1")
    return list(range(a, b + 1, step))


def _parse_measures(spec: str) -> list[str]:
    measures = [m.strip() for m in spec.split(",") if m.strip()]
    if not measures:
        raise CliError("no measures given")
    for m in measures:
        if m not in MEASURE_IDS:
            raise CliError(f"unknown measure {m!r}; known: {', '.join(MEASURE_IDS)}",
                           EXIT_UNKNOWN_MEASURE)
    return measures


def _load_text(args: argparse.Namespace) -> Text:
    if (args.family is None) == (args.input is None):
        raise CliError("exactly one of --family and --input is required")
    if args.family is not None:
        if args.family not in FAMILIES:
            raise CliError(f"unknown family {args.family!r}")
        try:
            w = generate(FamilySpec(args.family, args.param))
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                w = textio.load(fh.read(), args.format)
        except (OSError, textio.SerializationError) as exc:
            raise CliError(str(exc)) from exc
    if getattr(args, "reverse", False):
        w = reverse(w)
    if len(w) == 0:
        raise CliError("input text is empty")
    return w


def _emit(payload: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_gen(args: argparse.Namespace) -> int:
    w = _load_text(args)
    try:
        payload = textio.dump(w, args.format or "tokens")
    except textio.SerializationError as exc:
        raise CliError(str(exc)) from exc
    _emit(payload, args.output)
    return EXIT_OK


def cmd_measure(args: argparse.Namespace) -> int:
    measures = _parse_measures(args.measures)
    w = _load_text(args)
    runner = _MeasureRunner(w, args.node_budget)
    lines = []
    for m in measures:
        value, exact = runner.value(m)
        suffix = "" if exact else " exact=false"
        lines.append(f"{m}={value}{suffix}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    measures = _parse_measures(args.measures)
    if args.family not in FAMILIES:
        raise CliError(f"unknown family {args.family!r}")
    params = _parse_range(args.range) if args.range else [None]
    try:
        rows = sweep(args.family, params, measures, args.node_budget)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(rows_to_csv(rows), args.csv)
    return EXIT_OK


def _verify_units(args: argparse.Namespace) -> list[tuple[str, list[int | None]]]:
    if args.family == "all":
        if args.range:
            raise CliError("--range cannot be combined with --family all")
        return [(fam, QUICK_GRIDS[fam]) for fam in sorted(QUICK_GRIDS)]
    if args.family not in FAMILIES:
        raise CliError(f"unknown family {args.family!r}")
    if args.quick or not args.range:
        grid = QUICK_GRIDS.get(args.family)
        if grid is None:
            raise CliError(f"family {args.family!r} carries no predictions to verify")
        return [(args.family, grid)]
    return [(args.family, _parse_range(args.range))]


def cmd_verify(args: argparse.Namespace) -> int:
    units = _verify_units(args)
    lines = []
    failed = 0
    total = 0
    for fam, params in units:
        try:
            rows = verify(fam, params, args.node_budget)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        for r in rows:
            total += 1
            status = "pass" if r.ok else "FAIL"
            failed += 0 if r.ok else 1
            expected = r.expected.display() if isinstance(r.expected, Text) else r.expected
            computed = r.computed.display() if isinstance(r.computed, Text) else r.computed
            param = "-" if r.param is None else r.param
            lines.append(f"{status}  {r.family:<16} param={param:<5} {r.check:<9} "
                         f"expected={expected} computed={computed}")
    lines.append(f"{total - failed}/{total} checks passed")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def _parse_for_view(w: Text, view: str) -> Parsing:
    if view == "lz":
        return lz_parse(w)
    if view == "lz_no":
        return lz_no_overlap(w)
    if view == "lz_end":
        return lz_end_greedy(w)
    if view == "lex":
        return lex_parse(w)
    raise CliError(f"unknown view {view!r}")


def cmd_show(args: argparse.Namespace) -> int:
    w = _load_text(args)
    if len(w) > SHOW_CAP:
        raise CliError(
            f"text of length {len(w)} exceeds the show cap of {SHOW_CAP} rows; "
            "use the measure subcommand instead"
        )
    lines = []
    if args.view in ("bwt", "bbwt"):
        if args.view == "bwt":
            order = cyclic_rotation_order(w)
            rows = [(w.symbols[p - 1:] + w.symbols[:p - 1]) for p in order]
            result = bwt(w)
        else:
            from .text import lyndon_factorize, omega_compare_symbols
            from functools import cmp_to_key
            rows = []
            for factor in lyndon_factorize(w):
                fs = factor.symbols
                rows.extend(fs[i:] + fs[:i] for i in range(len(fs)))
            rows.sort(key=cmp_to_key(omega_compare_symbols))
            result = bbwt(w)
        helper = Text((), w.names)
        for i, rot in enumerate(rows, start=1):
            body = " ".join(helper.name_of(r) for r in rot[:-1])
            lines.append(f"{i:>4}  {body} | {helper.name_of(rot[-1])}")
        lines.append(f"{args.view}: {result.output.display()}   runs={result.run_count}")
    else:
        parsing = _parse_for_view(w, args.view)
        for i, ph in enumerate(parsing.phrases, start=1):
            chunk = w[ph.start - 1:ph.end].display()
            src = "literal" if ph.source is None else f"source={ph.source}"
            lines.append(f"{i:>4}  [{ph.start},{ph.end}]  {chunk}  ({src})")
        lines.append(f"{args.view}: {len(parsing)} phrases")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _add_text_source(p: argparse.ArgumentParser, with_reverse: bool = True) -> None:
    p.add_argument("--family", help=f"one of: {', '.join(sorted(FAMILIES))}")
    p.add_argument("--param", type=int, help="family parameter")
    p.add_argument("--input", help="path to a serialized text")
    p.add_argument("--format", choices=("ascii", "tokens"),
                   help="serialization (default: tokens for gen, autodetect for files)")
    if with_reverse:
        p.add_argument("--reverse", action="store_true", help="operate on the reversal")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="revsense", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a family string")
    _add_text_source(p)
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("measure", help="compute measures for a text")
    _add_text_source(p)
    p.add_argument("--measures", required=True, help="comma separated measure ids")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("sweep", help="parameter sweep to CSV")
    p.add_argument("--family", required=True)
    p.add_argument("--range", help="inclusive parameter range A:B or A:B:STEP")
    p.add_argument("--measures", required=True)
    p.add_argument("--csv", help="output CSV path (default: stdout)")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="closed-form predictions vs computation")
    p.add_argument("--family", required=True, help="family id or 'all'")
    p.add_argument("--range", help="inclusive parameter range A:B or A:B:STEP")
    p.add_argument("--quick", action="store_true", help="use the reduced grid")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("show", help="annotated rotation matrix or parse listing")
    _add_text_source(p)
    p.add_argument("--view", required=True, choices=("bwt", "bbwt", "lz", "lz_no", "lz_end", "lex"))
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"revsense: {exc}", file=sys.stderr)
        return exc.code
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
