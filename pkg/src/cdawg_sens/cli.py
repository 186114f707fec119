"""Command line front end: ``cdawg {build,size,repeats,delta,sweep,family,churn}``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import strings
from .cdawg import build_fast, build_naive, canonical_equal, dumps, export_dot, export_json, show
from .churn import ChurnFormulaError, churn_quadratic_check, fit_churn_exponent, leftward_run, online_text
from .families import KINDS, FamilySpec, family_row, rows_to_tsv
from .sensitivity import (
    CHECKS,
    KIND_ALIASES,
    BuilderMismatchError,
    EditOp,
    InvalidEditError,
    delta,
    evaluate_check,
    sweep,
)

DEFAULT_MAX_N = 10000


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    pass


def expand_repeat(pattern: str) -> bytes:
    """Expand ``(ab)^4c(ab)^3``-style notation; ``\\`` escapes the next character."""
    pos = 0

    def seq(depth: int) -> bytes:
        nonlocal pos
        out = b""
        while pos < len(pattern):
            ch = pattern[pos]
            if ch == ")":
                if depth == 0:
                    raise UsageError(f"unbalanced ')' at offset {pos} in {pattern!r}")
                return out
            if ch == "(":
                pos += 1
                atom = seq(depth + 1)
                if pos >= len(pattern) or pattern[pos] != ")":
                    raise UsageError(f"missing ')' in {pattern!r}")
                pos += 1
            elif ch == "^":
                raise UsageError(f"'^' without a preceding atom at offset {pos} in {pattern!r}")
            else:
                if ch == "\\":
                    pos += 1
                    if pos >= len(pattern):
                        raise UsageError(f"dangling escape in {pattern!r}")
                    ch = pattern[pos]
                atom = ch.encode("utf-8")
                pos += 1
            if pos < len(pattern) and pattern[pos] == "^":
                pos += 1
                start = pos
                while pos < len(pattern) and pattern[pos].isdigit():
                    pos += 1
                if start == pos:
                    raise UsageError(f"'^' needs a count at offset {start} in {pattern!r}")
                atom = atom * int(pattern[start:pos])
            out += atom
        if depth:
            raise UsageError(f"missing ')' in {pattern!r}")
        return out

    return seq(0)


def _add_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("text", nargs="?", help="input string, given literally")
    g.add_argument("--file", type=Path, help="read the input as raw bytes from a file")
    g.add_argument("--repeat", metavar="PATTERN", help="input in (ab)^4c(ab)^3 notation")


def _add_builder(p: argparse.ArgumentParser) -> None:
    p.add_argument("--oracle", action="store_true", help="use the definitional (quadratic) builder")
    p.add_argument("--verify", action="store_true", help="build both ways and require equal graphs")


def _read_input(args) -> bytes:
    if args.file is not None:
        try:
            t = args.file.read_bytes()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from exc
    elif args.repeat is not None:
        t = expand_repeat(args.repeat)
    elif args.text is not None:
        t = args.text.encode("utf-8")
    else:
        raise UsageError("no input given")
    if getattr(args, "oracle", False):
        cap = int(os.environ.get("CDAWG_MAX_N", DEFAULT_MAX_N))
        if len(t) > cap:
            raise UsageError(f"input length {len(t)} exceeds CDAWG_MAX_N={cap} for --oracle")
    return t


def _graph(t: bytes, args):
    g = build_naive(t) if args.oracle else build_fast(t)
    if args.verify:
        other = build_fast(t) if args.oracle else build_naive(t)
        if not canonical_equal(g, other):
            raise VerificationFailure(f"builders disagree on {show(t)}")
    return g


def _split(values: Optional[list[str]]) -> list[str]:
    out: list[str] = []
    for v in values or []:
        out.extend(x for x in v.split(",") if x)
    return out


def _int_range(s: str) -> list[int]:
    try:
        if ".." in s:
            lo, hi = s.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in s.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad integer range {s!r}") from exc


def cmd_build(args) -> int:
    g = _graph(_read_input(args), args)
    sys.stdout.write(export_json(g) if args.format == "json" else export_dot(g))
    return 0


def cmd_size(args) -> int:
    print(_graph(_read_input(args), args).size_e)
    return 0


def cmd_repeats(args) -> int:
    t = _read_input(args)
    ms = strings.maximal_set(t)
    if args.verify and build_fast(t).labels != ms.labels():
        raise VerificationFailure("graph nodes differ from the maximal substrings")
    reps = sorted(strings.maximal_repeats(t), key=lambda s: (len(s), s))
    print(f"# maximal substrings ({len(ms)})")
    for x in ms:
        print(show(x))
    print(f"# maximal repeats ({len(reps)})")
    for x in reps:
        print(show(x))
    return 0


def _edit_from_args(args) -> EditOp:
    try:
        kind = KIND_ALIASES[args.op]
        if kind == "delete":
            if args.char is not None:
                raise UsageError("--char is not used with --op del")
            return EditOp(kind)
        if args.char is None:
            raise UsageError(f"--op {args.op} needs --char")
        return EditOp(kind, args.char.encode("utf-8"))
    except InvalidEditError as exc:
        raise UsageError(str(exc)) from exc


def cmd_delta(args) -> int:
    t = _read_input(args)
    op = _edit_from_args(args)
    try:
        rep = delta(t, op, oracle=args.oracle, verify=args.verify)
    except InvalidEditError as exc:
        raise UsageError(str(exc)) from exc
    except BuilderMismatchError as exc:
        raise VerificationFailure(str(exc)) from exc
    violations, checked = [], {}
    for name in _split(args.check):
        if name not in CHECKS:
            raise UsageError(f"unknown check {name!r}")
        if op.kind not in CHECKS[name].kinds:
            raise UsageError(f"check {name} does not apply to {op.kind}")
        res = evaluate_check(name, t, op)
        checked[name] = "skipped (preconditions not met)" if res is None else ("ok" if not res else "FAILED")
        violations += res or []
    if args.json:
        d = rep.to_dict()
        if checked:
            d["checks"] = checked
            d["violations"] = [v.to_dict() for v in violations]
        sys.stdout.write(dumps(d))
    else:
        rows = [
            ("text", show(rep.original)),
            ("edited", show(rep.edited)),
            ("op", op.describe()),
            ("e", rep.e_before),
            ("e'", rep.e_after),
            ("delta", rep.delta),
            ("F", rep.F),
            ("G", rep.G),
            ("new_nodes", " ".join(map(show, rep.new_nodes))),
            ("degree_increased", " ".join(map(show, rep.degree_increased_nodes))),
        ]
        rows += [(f"check {k}", v) for k, v in checked.items()]
        for k, v in rows:
            print(f"{k:<17}{v}")
        for v in violations:
            print(f"VIOLATION {v.lemma_id}: {v.detail}")
    return 1 if violations else 0


def cmd_sweep(args) -> int:
    ops = _split(args.op) or ["ins", "del", "sub"]
    for o in ops:
        if o not in KIND_ALIASES:
            raise UsageError(f"unknown --op {o!r}")
    checks = _split(args.check) or ["bound"]
    try:
        rep = sweep(
            args.alphabet, args.max_len, ops, checks,
            min_len=args.min_len, cross_check=args.cross_check, spell=args.spell,
            mode=args.mode, jobs=args.jobs,
        )
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(dumps(rep.to_dict()) if args.json else rep.summary() + "\n")
    return 0 if rep.ok else 1


def cmd_family(args) -> int:
    kinds = [args.kind] if args.kind else [k for k in KINDS if k != "online"]
    rows = []
    for kind in kinds:
        for m in _int_range(args.m):
            if kind == "online":
                ks = range(m) if args.k == "all" else _int_range(args.k)
            else:
                ks = [0]
            for k in ks:
                try:
                    spec = FamilySpec(kind, m, k)
                except ValueError as exc:
                    raise UsageError(str(exc)) from exc
                rows.append(family_row(spec))
    if args.json:
        sys.stdout.write(dumps([r.to_dict() for r in rows]))
    else:
        sys.stdout.write(rows_to_tsv(rows))
    return 0 if all(r.match for r in rows) else 1


def cmd_churn(args) -> int:
    if args.fit:
        ms = _int_range(args.fit)
        try:
            slope, checks = fit_churn_exponent(ms)
        except ChurnFormulaError as exc:
            print(f"FAILED: {exc}", file=sys.stderr)
            return 1
        print("m\tn\ttransition_churn\ttransition_edge_churn\ttotal_churn")
        for c in checks:
            print(f"{c.m}\t{c.n}\t{c.transition_churn}\t{c.transition_edge_churn}\t{c.total_churn}")
        print(f"exponent\t{slope:.4f}")
        return 0
    if args.m is not None:
        if any(x is not None for x in (args.text, args.file, args.repeat)):
            raise UsageError("give either --m or an input string, not both")
        if args.m < 1:
            raise UsageError("--m must be >= 1")
        t = online_text(args.m)
    else:
        t = _read_input(args)
    if not t:
        raise UsageError("churn needs a non-empty input")
    rep = leftward_run(t, dot_dir=args.dot_dir)
    status, check = 0, None
    if args.m is not None:
        try:
            check = churn_quadratic_check(args.m, rep)
        except ChurnFormulaError as exc:
            print(f"FAILED: {exc}", file=sys.stderr)
            status = 1
    if args.json:
        d = rep.to_dict()
        if check is not None:
            d["quadratic_check"] = check.to_dict()
        sys.stdout.write(dumps(d))
    else:
        sys.stdout.write(rep.to_tsv())
        print(f"# total_churn\t{rep.total_churn}")
        if check is not None:
            print(f"# transition_churn\t{check.transition_churn}\t(9m^2+2m = {9 * args.m ** 2 + 2 * args.m})")
    return status


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cdawg", description="CDAWG construction and left-end edit sensitivity")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="print the CDAWG as DOT or JSON")
    _add_input(b)
    _add_builder(b)
    b.add_argument("--format", choices=("dot", "json"), default="dot")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("size", help="print e(T), the number of CDAWG edges")
    _add_input(s)
    _add_builder(s)
    s.set_defaults(func=cmd_size)

    r = sub.add_parser("repeats", help="list maximal substrings and maximal repeats")
    _add_input(r)
    r.add_argument("--verify", action="store_true")
    r.set_defaults(func=cmd_repeats, oracle=False)

    d = sub.add_parser("delta", help="size change under one left-end edit")
    _add_input(d)
    _add_builder(d)
    d.add_argument("--op", required=True, choices=sorted(KIND_ALIASES))
    d.add_argument("--char", help="character to insert or substitute")
    d.add_argument("--check", action="append", help="lemma/bound ids to evaluate on this edit")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_delta)

    w = sub.add_parser("sweep", help="exhaustive check over all strings up to a length")
    w.add_argument("--alphabet", default="ab")
    w.add_argument("--max-len", type=int, required=True)
    w.add_argument("--min-len", type=int, default=1)
    w.add_argument("--op", action="append", help="ins, del, sub (comma separated or repeated)")
    w.add_argument("--check", action="append", help=f"'all' or ids from: {', '.join(CHECKS)}")
    w.add_argument("--mode", choices=("per_x", "exists"), default="per_x")
    w.add_argument("--cross-check", action="store_true", help="compare both builders on every graph")
    w.add_argument("--spell", action="store_true", help="spell-check every graph")
    w.add_argument("--jobs", type=int, default=1)
    w.add_argument("--json", action="store_true")
    w.set_defaults(func=cmd_sweep)

    f = sub.add_parser("family", help="lower-bound witness families against their closed forms")
    f.add_argument("--kind", choices=KINDS)
    f.add_argument("--m", default="1..10", help="value, list a,b,c, or range lo..hi")
    f.add_argument("--k", default="0", help="online family only: value, list, range, or 'all' (0..m-1)")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_family)

    c = sub.add_parser("churn", help="edge churn of the leftward online build")
    _add_input(c, required=False)
    c.add_argument("--m", type=int, help="use the family string T_m and check its formulas")
    c.add_argument("--fit", metavar="MS", help="fit the churn growth exponent over m values, e.g. 4,8,16")
    c.add_argument("--dot-dir", type=Path, help="write one DOT file per step here")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_churn)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cdawg {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except VerificationFailure as exc:
        print(f"cdawg {args.command}: verification failed: {exc}", file=sys.stderr)
        return 1


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI in-process, returning ``(exit_code, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
