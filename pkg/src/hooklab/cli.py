"""Command-line entry point: ``hooklab <command> ...``."""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Any, Callable, Sequence

from . import bump, counting, poly
from .bicolored import BicoloredTableau, enumerate_bicolored
from .excited import enumerate_excited, to_move_tableau
from .shapes import (
    Kind,
    StrictPartition,
    contains,
    format_partition,
    hook_lengths,
    parse_partition,
    verify_w_sum,
    w_set,
    w_total,
)

SCHEMA = "hooklab/1"


class CliError(Exception):
    pass


def parse_skew(text: str) -> tuple[StrictPartition, StrictPartition]:
    outer, _, inner = text.partition("/")
    try:
        return parse_partition(outer), parse_partition(inner)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def kinds(flag: str) -> list[Kind]:
    return list(Kind) if flag.lower() == "both" else [Kind.parse(flag)]


def skew_name(lam: StrictPartition, mu: StrictPartition) -> str:
    return format_partition(lam) + ("" if not mu else "/" + format_partition(mu))


class Output:
    """Collects text lines or a JSON document and reports overall success."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.doc: dict[str, Any] = {"schema": SCHEMA}
        self.ok = True

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.as_json:
            self.doc["ok"] = self.ok
            print(json.dumps(self.doc, indent=2, sort_keys=False))
        else:
            print("\n".join(self.lines))


# commands ------------------------------------------------------------------

def cmd_hooks(args, out: Output) -> None:
    lam = parse_skew(args.shape)[0]
    out.doc.update(command="hooks", **{"lambda": list(lam)}, results=[])
    for kind in kinds(args.kind):
        rows = []
        out.line(f"type {kind.value} hooks of {format_partition(lam)}")
        for u, h in hook_lengths(lam, kind).items():
            wh = poly.format_linear(poly.weighted_hook(lam, kind, u))
            rows.append({"cell": list(u), "hook": h, "weighted": wh})
            out.line(f"  ({u[0]},{u[1]}) {h:>3}  {wh}")
        out.doc["results"].append({"kind": kind.value, "cells": rows})


def cmd_excited(args, out: Output) -> None:
    lam, mu = parse_skew(args.shape)
    out.doc.update(command="excited", shape=skew_name(lam, mu), results=[])
    for kind in kinds(args.kind):
        diagrams = enumerate_excited(lam, mu, kind)
        out.line(f"type {kind.value}: {len(diagrams)} excited diagrams of {skew_name(lam, mu)}")
        entry = {"kind": kind.value, "count": len(diagrams), "diagrams": []}
        for d in diagrams[: args.limit]:
            mt = to_move_tableau(d)
            cells = " ".join(f"({i},{j})" for i, j in d.sorted_cells())
            out.line(f"  {cells or '-'}   moves {'/'.join(''.join(map(str, r)) for r in mt.rows) or '-'}")
            entry["diagrams"].append({"cells": [list(c) for c in d.sorted_cells()],
                                      "moves": [list(r) for r in mt.rows]})
        if len(diagrams) > args.limit:
            out.line(f"  ... {len(diagrams) - args.limit} more")
        if len(diagrams) <= args.limit:
            out.line(f"  sum: {poly.excited_enumerator_text(lam, mu, kind)}")
        out.doc["results"].append(entry)


def cmd_bicolored(args, out: Output) -> None:
    lam, mu = parse_skew(args.shape)
    out.doc.update(command="bicolored", shape=skew_name(lam, mu), results=[])
    # here the partition after the slash is the tableau shape and the one before bounds it
    for kind in kinds(args.kind):
        tabs = enumerate_bicolored(mu, lam, kind)
        out.line(f"type {kind.value}: {len(tabs)} bicolored tableaux of shape "
                 f"{format_partition(mu)} bounded by {format_partition(lam)}")
        for t in tabs[: args.limit]:
            out.line(f"  {t}")
        if len(tabs) > args.limit:
            out.line(f"  ... {len(tabs) - args.limit} more")
        out.doc["results"].append({"kind": kind.value, "count": len(tabs),
                                   "tableaux": [t.to_json()["rows"] for t in tabs[: args.limit]]})


def cmd_count(args, out: Output) -> None:
    lam, mu = parse_skew(args.shape)
    if not contains(mu, lam):
        raise CliError(f"{format_partition(mu)} is not contained in {format_partition(lam)}")
    rep = counting.count_all(lam, mu)
    out.ok = rep.agree
    out.doc.update(command="count", **rep.to_json())
    out.line(f"{'shape':<12} {'syt':>8} {'naruse-B':>10} {'naruse-D':>10} {'recursive':>10}  agree")
    out.line(f"{skew_name(lam, mu):<12} {rep.oracle:>8} {rep.naruse_b:>10} {rep.naruse_d:>10} "
             f"{rep.recursive:>10}  {'yes' if rep.agree else 'NO'}")


def _verify_theorem1(lam, mu, kind, args) -> dict:
    lhs, rhs = poly.theorem1_lhs(lam, mu, kind), poly.theorem1_rhs(lam, mu, kind)
    return {"ok": lhs == rhs, "lhs_mass": lhs.mass, "rhs_mass": rhs.mass,
            "terms": len(rhs.terms), "w_set": sorted(w_set(mu, lam, kind))}


def _verify_bijection(lam, mu, kind, args) -> dict:
    rep = bump.verify_bijection(mu, lam, kind)
    data = rep.to_json()
    if not rep.ok:
        data["counterexamples"] = [[str(t), k, str(s)] for t, k, s in rep.counterexamples]
    return data


def _verify_sieve(lam, mu, kind, args) -> dict:
    try:
        return {"ok": bump.verify_sieve(mu, lam, kind)}
    except bump.VerificationError as exc:
        return {"ok": False, "error": str(exc), "counterexample": str(exc.counterexample)}


def _verify_weighted(lam, mu, kind, args) -> dict:
    rng = random.Random(args.seed)
    recursion = poly.verify_weighted_recursion(lam, mu, kind)
    points = []
    for _ in range(args.samples):
        z = {c: rng.randint(1, 9) for c in poly.z_range(lam)}
        points.append({"z": [z[c] for c in sorted(z)], "ok": poly.verify_theorem_z(lam, mu, kind, z)})
    return {"ok": recursion and all(p["ok"] for p in points), "recursion": recursion, "points": points}


def _verify_lemw(lam, mu, kind, args) -> dict:
    return {"ok": verify_w_sum(mu, lam, kind) and poly.verify_w_sum_weighted(mu, lam, kind),
            "w_set": sorted(w_set(mu, lam, kind)), "total": w_total(mu, lam, kind),
            "size": lam.size - mu.size}


VERIFIERS: dict[str, Callable[..., dict]] = {
    "theorem1": _verify_theorem1,
    "bijection": _verify_bijection,
    "sieve": _verify_sieve,
    "weighted": _verify_weighted,
    "lemw": _verify_lemw,
}


def cmd_verify(args, out: Output) -> None:
    lam, mu = parse_skew(args.shape)
    if args.what in ("bijection", "sieve", "weighted") and not contains(mu, lam):
        raise CliError(f"{format_partition(mu)} is not contained in {format_partition(lam)}")
    out.doc.update(command="verify", what=args.what, shape=skew_name(lam, mu), results=[])
    for kind in kinds(args.kind):
        res = VERIFIERS[args.what](lam, mu, kind, args)
        out.ok &= bool(res["ok"])
        out.doc["results"].append({"kind": kind.value, **res})
        details = " ".join(f"{k}={_short(v)}" for k, v in res.items() if k not in ("ok", "points"))
        out.line(f"verify {args.what} {skew_name(lam, mu)} type {kind.value}: "
                 f"{'pass' if res['ok'] else 'FAIL'} {details}".rstrip())


def _short(v: Any) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def _load_tableau(args, kind: Kind) -> BicoloredTableau:
    if args.tableau_file:
        with open(args.tableau_file) as fh:
            data = json.load(fh)
        data.setdefault("kind", kind.value)
        return BicoloredTableau.from_json(data)
    if args.rows is not None:
        return BicoloredTableau.from_text(args.rows, kind)
    raise CliError("give a tableau with --tableau-file or --rows")


def cmd_trace(args, out: Output) -> None:
    lam, mu = parse_skew(args.shape)
    ks = kinds(args.kind)
    if len(ks) != 1:
        raise CliError("trace needs a single --kind")
    kind = ks[0]
    t = _load_tableau(args, kind)
    if not t.is_valid():
        raise CliError(f"not a valid bicolored tableau: {t}")
    if mu and t.shape != mu:
        raise CliError(f"tableau has shape {format_partition(t.shape)}, expected {format_partition(mu)}")
    tr = bump.InsertionTrace(tableaux=[] if args.trace_verbosity >= 2 else None)
    result, tr = bump.repeated_insert(t, args.k, lam, tr)
    out.doc.update(command="trace", kind=kind.value, **{"lambda": list(lam)}, k=args.k,
                   input=t.to_json()["rows"], output=result.to_json()["rows"], trace=tr.to_json())
    out.line(f"insert x{args.k} into {t} (type {kind.value}, bounded by {format_partition(lam)})")
    if args.trace_verbosity >= 1:
        tabs = iter(tr.tableaux or [])
        for n, chunk in enumerate(tr.per_insertion(), start=1):
            out.line(f"insertion {n}")
            for i, step in enumerate(chunk):
                out.line("  " + step.format())
                if tr.tableaux is not None and i > 0:
                    out.line("    " + str(next(tabs)))
    out.line(f"insertions: {tr.insertions}")
    out.line(f"result: {result}")


def parse_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("-")
    if not sep:
        lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CliError(f"bad range {text!r}") from None
    if a < 1 or b < a:
        raise CliError(f"bad range {text!r}")
    return list(range(a, b + 1))


def cmd_bench(args, out: Output) -> None:
    out.doc.update(command="bench", results=[])
    out.line(f"{'m':>3} {'insertions':>11} {'2^m':>8} {'seconds':>9}")
    for m in parse_range(args.m):
        start = time.perf_counter()
        try:
            n = bump.verify_complexity(m, check_states=m <= args.check_upto)
            good = n == 2 ** m
        except bump.VerificationError as exc:
            n, good = -1, False
            out.line(f"  m={m}: {exc}")
        secs = time.perf_counter() - start
        out.ok &= good
        out.doc["results"].append({"m": m, "insertions": n, "expected": 2 ** m, "ok": good,
                                   "seconds": round(secs, 3)})
        out.line(f"{m:>3} {n:>11} {2 ** m:>8} {secs:>9.3f}" + ("" if good else "  MISMATCH"))


# argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--kind", default="both", choices=["B", "D", "b", "d", "both"],
                        help="diagram type (default: both)")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--trace-verbosity", type=int, default=1, choices=[0, 1, 2])

    p = argparse.ArgumentParser(prog="hooklab",
                                description="Hook-length formulas for skew shifted shapes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hooks", parents=[common], help="hook lengths of every cell")
    s.add_argument("shape")
    s.set_defaults(func=cmd_hooks)

    s = sub.add_parser("excited", parents=[common], help="list excited diagrams of lam/mu")
    s.add_argument("shape")
    s.add_argument("--limit", type=int, default=50)
    s.set_defaults(func=cmd_excited)

    s = sub.add_parser("bicolored", parents=[common],
                       help="bicolored tableaux of shape mu bounded by lam, given as lam/mu")
    s.add_argument("shape")
    s.add_argument("--limit", type=int, default=20)
    s.set_defaults(func=cmd_bicolored)

    s = sub.add_parser("count", parents=[common], help="count standard tableaux four ways")
    s.add_argument("shape")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("verify", parents=[common], help="run an identity or bijection check")
    s.add_argument("what", choices=sorted(VERIFIERS))
    s.add_argument("shape")
    s.add_argument("--samples", type=int, default=5, help="random z-points for 'weighted'")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("trace", parents=[common], help="trace a repeated insertion")
    s.add_argument("shape", help="lam/mu, with mu the shape of the tableau")
    s.add_argument("--tableau-file", help="JSON tableau {\"kind\":..,\"rows\":[[{\"v\":0,\"c\":\"b\"},..],..]}")
    s.add_argument("--rows", help='tableau as text, e.g. "0 r0 r1 r1/1 2 2/2"')
    s.add_argument("-k", "--k", type=int, required=True, help="index of the inserted variable")
    s.set_defaults(func=cmd_trace)

    s = sub.add_parser("bench", parents=[common], help="worst-case insertion counts")
    s.add_argument("m", nargs="?", default="1-10", help="range such as 1-12")
    s.add_argument("--check-upto", type=int, default=8,
                   help="compare intermediate states with the closed form up to this m")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        args.func(args, out)
    except (CliError, ValueError) as exc:
        print(f"hooklab: error: {exc}", file=sys.stderr)
        return 2
    out.emit()
    return 0 if out.ok else 1


if __name__ == "__main__":
    sys.exit(main())
