"""``thinwidth`` command line.

Exit codes: 0 success, 1 a check failed (counterexample, or ``validate`` on a
non-knot word), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import enum
import io
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .enumeration import enumerate_knot_words, min_width_table, run_property_suite
from .errors import ParseError, WidthError
from .gamma_graph import SnapTieWarning, find_unique_loop, load_spec
from .morse_word import Validity, parse, profile
from .satellite import blowup, lower_bound, theorem_gap
from .word_ops import steps_from_json, trace_sequence


class Status(enum.IntEnum):
    OK = 0
    FAIL = 1
    USAGE = 2


@dataclass
class CommandResult:
    status: Status
    payload: object = None
    stderr: list[str] = field(default_factory=list)
    json_mode: bool = False

    def render(self) -> str:
        if self.payload is None:
            return ""
        if self.json_mode and not isinstance(self.payload, str):
            return json.dumps(self.payload, indent=2, sort_keys=False)
        return str(self.payload)


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.format_usage()}{self.prog}: error: {message}")


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


# -- subcommands -------------------------------------------------------------


def _cmd_width(args):
    prof = profile(parse(args.word))
    bridge = "none" if prof.bridge is None else prof.bridge
    text = f"width={prof.width} bridge={bridge} validity={prof.validity.label}"
    return CommandResult(Status.OK, prof.to_json() if args.json else text)


def _cmd_validate(args):
    prof = profile(parse(args.word))
    status = Status.OK if prof.validity is Validity.KNOT else Status.FAIL
    if args.json:
        return CommandResult(status, {"word": prof.word.text, "validity": prof.validity.label,
                                      "knot": prof.validity is Validity.KNOT})
    return CommandResult(status, f"{prof.word.text or '(empty)'}: {prof.validity.label}")


def _cmd_blowup(args):
    x = parse(args.word)
    y = blowup(x, args.n)
    px, py = profile(x), profile(y)
    if args.json:
        return CommandResult(Status.OK, {"word": x.text, "n": args.n, "blowup": y.text,
                                         "width": py.width, "base_width": px.width})
    if px.bridge is not None:
        text = f"{y.text} (width {py.width} = {args.n}^2 * {px.width})"
    else:
        text = f"{y.text} (width {py.width}; input not balanced)"
    return CommandResult(Status.OK, text)


def _cmd_op(args):
    start = parse(args.word)
    steps = steps_from_json(_read_json(args.ops))
    rows = trace_sequence(start, steps)
    final = rows[-1][1] if rows else start
    if args.json:
        return CommandResult(Status.OK, {
            "word": start.text,
            "steps": [
                {"step": k, "op": s.to_json(), "word": w.text, "width": wd, "validity": v.label}
                for k, (s, w, wd, v) in enumerate(rows, start=1)
            ],
            "result": final.text,
            "trace": [r[2] for r in rows],
        })
    lines = [f"start {start.text or '(empty)'} width={profile(start).width}"]
    for k, (s, w, wd, v) in enumerate(rows, start=1):
        lines.append(f"{k} {s} -> {w.text or '(empty)'} width={wd} validity={v.label}")
    lines.append(f"result {final.text or '(empty)'}")
    return CommandResult(Status.OK, "\n".join(lines))


def _cmd_gap(args):
    sat, loop = parse(args.satword), parse(args.loopword)
    gap = theorem_gap(sat, loop, args.n)
    ws, wl = profile(sat).width, profile(loop).width
    if args.json:
        return CommandResult(Status.OK, {"satellite_word": sat.text, "loop_word": loop.text,
                                         "n": args.n, "gap": gap})
    return CommandResult(Status.OK, f"gap={gap} ({ws} - {args.n}^2 * {wl})")


def _cmd_bound(args):
    rep = lower_bound(parse(args.loopword), args.n)
    if args.json:
        return CommandResult(Status.OK, rep.to_json())
    lines = [
        f"{t.kind.name}@{t.index} omega={t.omega} contribution={t.contribution}" for t in rep.terms
    ]
    lines.append(
        f"total={rep.total} n^2*width={args.n}^2*{profile(rep.loop_word).width} "
        f"identity={'holds' if rep.identity_holds else 'fails'}"
    )
    return CommandResult(Status.OK, "\n".join(lines))


def _cmd_graph_loop(args):
    spec = load_spec(_read_json(args.spec))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SnapTieWarning)
        analysis = find_unique_loop(spec)
    notes = [f"warning: {w}" for w in analysis.warnings]
    if args.json:
        return CommandResult(Status.OK, analysis.to_json(), notes)
    lines = [
        f"loop={','.join(analysis.loop)}",
        f"word={analysis.loop_word.text}",
        f"cycle_rank={analysis.cycle_rank}",
    ]
    lines += [f"{v}\t{c.value}" for v, c in analysis.classification.items()]
    return CommandResult(Status.OK, "\n".join(lines), notes)


def _cmd_enum(args):
    res = enumerate_knot_words(args.b, jobs=args.jobs)
    if args.json:
        return CommandResult(Status.OK, res.to_json())
    lines = [f"{w.text}\t{profile(w).width}" for w in res.words]
    lines.append(
        f"count={res.count} min_width={res.min_width} "
        f"witnesses={','.join(w.text for w in res.witnesses)}"
    )
    return CommandResult(Status.OK, "\n".join(lines))


def _cmd_table(args):
    rows = min_width_table(args.B, jobs=args.jobs)
    if args.json:
        return CommandResult(Status.OK, [
            {"bridge": b, "count": c, "min_width": m, "witness": w} for b, c, m, w in rows
        ])
    lines = ["bridge\tcount\tmin_width\twitness"]
    lines += [f"{b}\t{c}\t{m}\t{w}" for b, c, m, w in rows]
    return CommandResult(Status.OK, "\n".join(lines))


def _cmd_verify(args):
    rep = run_property_suite(
        args.suite, max_len=args.max_len, max_n=args.max_n,
        max_vertices=args.max_vertices, jobs=args.jobs,
    )
    status = Status.OK if rep.passed else Status.FAIL
    if args.json:
        return CommandResult(status, rep.to_json())
    limits = " ".join(f"{k}={v}" for k, v in rep.limits.items())
    if rep.passed:
        return CommandResult(status, f"PASS {rep.suite.value} checked={rep.checked} {limits}")
    return CommandResult(
        status, f"FAIL {rep.suite.value} checked={rep.checked} {limits}\n"
        f"counterexample: {rep.counterexample}",
    )


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a single JSON document")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for enumeration and verification")

    parser = _Parser(prog="thinwidth", description="Morse-word width calculus for satellite knots.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--jobs", type=int, default=1)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("width", parents=[common], help="prefix sums, width, bridge number")
    p.add_argument("word")
    p.set_defaults(func=_cmd_width)

    p = sub.add_parser("validate", parents=[common], help="validity class; exit 1 unless knot")
    p.add_argument("word")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("blowup", parents=[common], help="braid-pattern word of winding n")
    p.add_argument("word")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("op", parents=[common], help="apply a type1/type2 operation sequence")
    p.add_argument("word")
    p.add_argument("--ops", required=True, help="JSON file with the step array ('-' for stdin)")
    p.set_defaults(func=_cmd_op)

    p = sub.add_parser("gap", parents=[common], help="width(sat) - n^2 width(loop)")
    p.add_argument("satword")
    p.add_argument("loopword")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("bound", parents=[common], help="per-critical-point lower bound")
    p.add_argument("loopword")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("graph", parents=[common], help="leveled tube graph analysis")
    gsub = p.add_subparsers(dest="graph_command", metavar="ACTION", parser_class=_Parser)
    gsub.required = True
    g = gsub.add_parser("loop", parents=[common], help="find the unique loop and its word")
    g.add_argument("spec", help="tube spec JSON file ('-' for stdin)")
    g.set_defaults(func=_cmd_graph_loop)

    p = sub.add_parser("enum", parents=[common], help="list knot words of bridge number b")
    p.add_argument("-b", type=int, required=True)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("table", parents=[common], help="minimum-width table up to bridge B")
    p.add_argument("-B", type=int, required=True)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive property suite")
    p.add_argument("suite", help="lemma45, blowup, bound or graph")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-vertices", type=int, default=7)
    p.set_defaults(func=_cmd_verify)

    return parser


def dispatch(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    usage_out = io.StringIO()
    try:
        with contextlib.redirect_stdout(usage_out):
            args = parser.parse_args(list(argv))
    except _Usage as exc:
        return CommandResult(Status.USAGE, None, [str(exc)])
    except SystemExit as exc:
        # --help / --version
        status = Status.OK if not exc.code else Status.USAGE
        return CommandResult(status, usage_out.getvalue().rstrip("\n"))
    if args.jobs < 1:
        return CommandResult(Status.USAGE, None, ["thinwidth: error: --jobs must be >= 1"])
    try:
        result = args.func(args)
    except WidthError as exc:
        return CommandResult(Status.USAGE, None, [f"error: {exc.code}: {exc}"])
    result.json_mode = args.json
    return result


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    result = dispatch(argv)
    for line in result.stderr:
        print(line, file=sys.stderr)
    out = result.render()
    if out:
        print(out)
    return int(result.status)


if __name__ == "__main__":
    sys.exit(main())
