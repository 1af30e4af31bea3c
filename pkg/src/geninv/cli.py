"""``geninv`` command line: compute, check, verify, search, oracle.

Exit status: 0 when the answer exists / holds, 1 when it does not (the
report carries the criterion trace), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from . import inverses as inv
from .formats import FormatError, dumps, read_matrix, read_monoid, to_jsonable
from .matrix import ShapeError, SquareMatrix, inner_inverse, rank_normal_form
from .monoid import TAGS, CapExceeded, MonoidError, exhaustive_solutions
from .scalars import ScalarParseError

EXIT_OK, EXIT_NO, EXIT_USAGE = 0, 1, 2

COMPUTE_OPS = ("mp", "group", "along", "left-along", "right-along", "inner", "one3", "one4", "jacobson",
               "triple", "triple-left")
CHECK_OPS = ("regular", "ep", "gmp-left", "gmp-right", "along-exists", "corner", "shift")
NEEDS = {
    "mp": "a", "group": "a", "inner": "a", "one3": "a", "one4": "a", "regular": "a", "ep": "a",
    "gmp-left": "a", "gmp-right": "a",
    "along": "ad", "left-along": "ad", "right-along": "ad", "along-exists": "ad", "shift": "ad",
    "corner": "ae", "jacobson": "ab", "triple": "abd", "triple-left": "abd",
}
RING_ONLY = {"inner", "jacobson", "triple"}


class UsageError(Exception):
    pass


@dataclass
class Result:
    command: str
    status: str
    value: Any = None
    witnesses: dict = field(default_factory=dict)
    trace: list = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.status in ("exists", "holds") else EXIT_NO


# -- input -------------------------------------------------------------------------


def _load_operands(args, names: str) -> dict:
    monoid = read_monoid(args.table) if args.table else None
    out = {}
    for name in names:
        raw = getattr(args, name, None)
        if raw is None:
            raise UsageError(f"--{name} is required for {args.op}")
        if monoid is not None:
            out[name] = _table_element(monoid, raw)
        else:
            out[name] = read_matrix(raw)
    mats = [v for v in out.values() if isinstance(v, SquareMatrix)]
    for m in mats[1:]:
        if m.domain != mats[0].domain or m.n != mats[0].n:
            raise UsageError("operands must share ring and dimension")
    return out


def _table_element(monoid, raw: str):
    if raw.isdigit() and int(raw) < monoid.k:
        return monoid.element(int(raw))
    if monoid.labels and raw in monoid.labels:
        return monoid.element(monoid.labels.index(raw))
    raise UsageError(f"{raw!r} is neither an element id nor a label of the table")


def _unit_trace(w: Optional[inv.UnitWitness], name: str = "u") -> list:
    if w is None:
        return []
    state = "invertible" if w.invertible else "singular"
    return [f"{name} = {w.construction} = {w.u} is {state} (inner inverse used: {w.inner_inverse_used})"]


def _green_trace(ws) -> list:
    out = []
    for w in ws:
        wit = []
        if w.x is not None:
            wit.append(f"x = {w.x}")
        if w.y is not None:
            wit.append(f"y = {w.y}")
        out.append(f"Green {w.relation}: {'holds' if w.holds else 'fails'}" + (f" ({', '.join(wit)})" if wit else ""))
    return out


# -- compute -------------------------------------------------------------------------


def compute(op: str, x: dict) -> Result:
    a, b, d = x.get("a"), x.get("b"), x.get("d")
    cmd = f"compute {op}"
    if op == "mp":
        r = inv.moore_penrose(a)
        trace = _unit_trace(r.unit) + (_green_trace([r.criterion]) if r.criterion else [])
        if not r.exists:
            trace.append("no Moore-Penrose inverse")
            return Result(cmd, "not_exists", None, {"unit": r.unit}, trace)
        return Result(cmd, "exists", r.mp, {"one_three": r.one_three, "one_four": r.one_four, "unit": r.unit},
                      trace + [f"Penrose equations failing: {inv.penrose_failures(a, r.mp) or 'none'}"])
    if op == "group":
        if not inv.is_ring(a):
            g = inv.group_of(a)
            return Result(cmd, "exists" if g is not None else "not_exists", g, {},
                          ["a^# = a^||a by the Green route"])
        r = inv.group_inverse(a)
        if not r.exists:
            return Result(cmd, "not_exists", None, {"unit": r.unit},
                          _unit_trace(r.unit, "w") + ["no group inverse"])
        return Result(cmd, "exists", r.sharp, {"unit": r.unit}, _unit_trace(r.unit, "w"))
    if op in ("along", "left-along", "right-along"):
        w = inv.invert_along(a, d) if op == "along" else inv.one_sided_along(a, d, op.split("-")[0])
        trace = _unit_trace(w.unit) + _unit_trace(w.unit_right, "v") + _green_trace(w.green)
        if not w.exists:
            return Result(cmd, "not_exists", None, {"unit": w.unit, "unit_right": w.unit_right},
                          trace + [f"a is not {op.replace('-along', '') + ' ' if op != 'along' else ''}"
                                   "invertible along d"])
        return Result(cmd, "exists", w.b, {"unit": w.unit, "unit_right": w.unit_right, "green": list(w.green)},
                      trace)
    if op == "inner":
        g = inner_inverse(a)
        nf = rank_normal_form(a)
        return Result(cmd, "exists", g, {"P": nf.P, "Q": nf.Q, "rank": nf.r},
                      [f"a = P E_{nf.r} Q, g = Q^-1 E_{nf.r} P^-1", f"a g a = a: {a @ g @ a == a}"])
    if op in ("one3", "one4"):
        t = inv.one_three(a) if op == "one3" else inv.one_four(a)
        what = "a <=_L a*a" if op == "one3" else "a <=_R aa*"
        if t is None:
            return Result(cmd, "not_exists", None, {}, [f"{what} fails"])
        return Result(cmd, "exists", t, {}, [f"{what} holds", f"Penrose failures: {inv.penrose_failures(a, t)}"])
    if op == "jacobson":
        y = inv.jacobson(a, b)
        one = a.one()
        if y is None:
            return Result(cmd, "not_exists", None, {}, [f"1 + ab = {one + a @ b} is singular, so is 1 + ba"])
        return Result(cmd, "exists", y, {"one_plus_ab_inverse": inv.try_invert(one + a @ b)},
                      ["(1 + ba)^-1 = 1 - b(1 + ab)^-1 a"])
    if op == "triple":
        try:
            r = inv.along_triple(a, b, d)
        except inv.PreconditionError as exc:
            return Result(cmd, "precondition_failed", None, {}, [str(exc)])
        wit = {"exists": {"b": r.exists[0], "adb": r.exists[1], "bda": r.exists[2]},
               "adb_routes": r.adb_routes, "bda_routes": r.bda_routes, "b_routes": r.b_routes, "unit": r.unit,
               "consistent": r.consistent}
        if not r.exists[0]:
            return Result(cmd, "not_exists", None, wit, ["b, adb and bda are not invertible along d"]
                          + _unit_trace(r.unit))
        return Result(cmd, "exists", r.value_adb, wit,
                      [f"(bda)^||d = {r.bda_routes.get('direct')}", f"all routes agree: {r.consistent}"])
    if op == "triple-left":
        try:
            r = inv.one_sided_along_triple(a, b, d, "left")
        except inv.PreconditionError as exc:
            return Result(cmd, "precondition_failed", None, {}, [str(exc)])
        wit = {"b_exists": r.b_exists, "adb_exists": r.product_exists, "consistent": r.consistent}
        if not r.b_exists:
            return Result(cmd, "not_exists", None, wit, ["b (hence adb) is not left invertible along d"])
        return Result(cmd, "exists", r.witness.b, wit, ["(adb)_l = b_l b y a_l with d = ydbd"])
    raise UsageError(f"unknown compute operation {op!r}")


# -- check -----------------------------------------------------------------------------


def check(op: str, x: dict) -> Result:
    a, d = x.get("a"), x.get("d")
    cmd = f"check {op}"
    if op == "regular":
        g = a.inner_inverse()
        if g is None:
            return Result(cmd, "fails", None, {}, ["no inner inverse"])
        return Result(cmd, "holds", g, {}, ["a g a = a"])
    if op == "ep":
        r = inv.is_ep(a)
        return Result(cmd, "holds" if r.holds else "fails", r.holds,
                      {"mp": r.mp.mp, "via_left": r.via_left, "via_right": r.via_right},
                      [f"a+ exists: {r.mp.exists}", f"left g-MP and aS = a*S: {r.via_left}",
                       f"right g-MP and aS = a*S: {r.via_right}", f"routes consistent: {r.consistent}"])
    if op in ("gmp-left", "gmp-right"):
        side = op.split("-")[1]
        w = inv.gmp_check(a, side)
        names = ("x", "y", "b") if side == "left" else ("s", "t", "c")
        wit = dict(zip(names, (w.x, w.y, w.b)))
        wit[f"{names[2]}_alt"] = w.b_alt
        return Result(cmd, "holds" if w.holds else "fails", w.holds, wit, _green_trace(w.green))
    if op == "along-exists":
        w = inv.invert_along(a, d)
        trace = _unit_trace(w.unit) + _unit_trace(w.unit_right, "v") + _green_trace(w.green)
        return Result(cmd, "holds" if w.exists else "fails", w.exists, {"b": w.b}, trace)
    if op == "corner":
        e = x["e"]
        try:
            r = inv.corner_unit_check(a, e)
        except inv.PreconditionError as exc:
            return Result(cmd, "precondition_failed", None, {}, [str(exc)])
        return Result(cmd, "holds" if r.holds else "fails", r.holds, {"corner_inverse": r.w, "along": r.along.b},
                      ["eae is a unit of eSe" if r.holds else "eae is not a unit of eSe"])
    if op == "shift":
        try:
            r = inv.shift_conjugation_check(a, d)
        except inv.PreconditionError as exc:
            return Result(cmd, "precondition_failed", None, {}, [str(exc)])
        return Result(cmd, "holds" if r.along else "fails", r.consistent,
                      {"a_along_d": r.along, "da_along_dd1": r.da_along_e, "ad_along_d1d": r.ad_along_f},
                      [f"all three agree: {r.consistent}"])
    raise UsageError(f"unknown check {op!r}")


# -- rendering ---------------------------------------------------------------------------


def _human_value(v) -> str:
    return "none" if v is None else str(v)


def render_result(r: Result, fmt: str) -> str:
    if fmt == "machine":
        return dumps(r)
    lines = [f"{r.command}: {r.status}"]
    if r.value is not None:
        lines.append(f"value: {_human_value(r.value)}")
    for k, v in r.witnesses.items():
        if v is None or v == [] or v == {}:
            continue
        if isinstance(v, inv.UnitWitness):
            v = f"{v.construction} = {v.u}" + (f", inverse {v.u_inv}" if v.invertible else ", singular")
        elif isinstance(v, dict):
            v = ", ".join(f"{kk}: {_human_value(vv)}" for kk, vv in v.items())
        elif isinstance(v, list):
            v = "; ".join(str(to_jsonable(i)) if not hasattr(i, "relation") else f"{i.relation} {i.holds}"
                          for i in v)
        lines.append(f"{k}: {_human_value(v)}")
    lines += [f"  {t}" for t in r.trace]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# -- verify / search / oracle -----------------------------------------------------------


def _universe(args):
    from .verify import parse_universe
    return parse_universe(args.universe, args.samples, args.seed)


def run_verify(args) -> int:
    from .verify import LABELS, OUT_OF_SCOPE, REGISTRY, applicable_ids, registry_ids
    from .verify.runner import verify_all

    if args.list:
        rows = [{"id": t, "arity": REGISTRY[t].arity, "tier": REGISTRY[t].tier, "statement": REGISTRY[t].statement}
                for t in registry_ids()]
        out = {"registry": rows, "out_of_scope": OUT_OF_SCOPE, "labels": list(LABELS)}
        if args.format == "machine":
            _emit(dumps(out), args.out)
        else:
            text = "".join(f"{r['id']:6} arity {r['arity']} {r['tier']:6} {r['statement']}\n" for r in rows)
            text += "".join(f"{k:6} out of scope: {v}\n" for k, v in OUT_OF_SCOPE.items())
            _emit(text, args.out)
        return EXIT_OK
    if args.properties:
        return _run_properties(args)
    if not args.theorem or not args.universe:
        raise UsageError("verify needs --theorem and --universe (or --list or --properties)")
    u = _universe(args)
    if args.theorem == "all":
        ids = applicable_ids(u)
    else:
        ids = [t.strip() for t in args.theorem.split(",")]
        for t in ids:
            if t in OUT_OF_SCOPE:
                raise UsageError(f"{t} has no predicate: {OUT_OF_SCOPE[t]}")
            if t not in REGISTRY:
                raise UsageError(f"unknown theorem id {t!r}")
    reports = verify_all(u, args.jobs, ids)
    bad = [r for r in reports if not r.ok]
    if args.format == "machine":
        body = {"universe": u.describe(), "reports": [r.to_dict() for r in reports],
                "summary": {"theorems": len(reports), "counterexamples": sum(len(r.counterexamples) for r in reports),
                            "oracle_disagreements": sum(len(r.oracle_disagreements) for r in reports),
                            "failed": [r.theorem for r in bad]}}
        _emit(dumps(body), args.out)
    else:
        lines = []
        for r in reports:
            tag = "ok" if r.ok else "FAIL"
            lines.append(f"{r.theorem:6} {tag:4} checked {r.instances_checked} (applicable {r.applicable}, "
                         f"skipped {r.skipped}){' sampled' if r.sampled else ''}; counterexamples "
                         f"{len(r.counterexamples)}, oracle disagreements {len(r.oracle_disagreements)}; "
                         f"{r.elapsed:.2f}s")
            for c in (r.counterexamples + r.oracle_disagreements)[:5]:
                lines.append(f"    #{c.index} {c.values}: {c.failures + c.disagreements}")
        lines.append(f"{len(reports) - len(bad)}/{len(reports)} theorems without counterexamples on {u.spec}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_NO if bad else EXIT_OK


def _run_properties(args) -> int:
    from .verify import parse_universe
    from .verify.suite import property_suite

    u = parse_universe(args.universe or "qi:3:random", args.samples or 200, args.seed)
    if u.kind != "random":
        raise UsageError("--properties needs a random universe (qi:n:random or gf:p:n:random)")
    rep = property_suite(u.samples, u.seed, u.n, u.domain)
    if args.format == "machine":
        _emit(dumps({"universe": u.describe(), "properties": rep.to_dict()}), args.out)
    else:
        lines = [f"mp vs full-rank factorization: {rep.mp_checked} matrices",
                 f"along unit formulas: {rep.along_pairs} pairs ({rep.along_attempts} drawn)",
                 f"triple formula under {rep.inner_samples} inner inverses: {rep.triple_checked} triples "
                 f"({rep.triple_skipped} without b^||d)",
                 f"failures: {len(rep.failures)}"]
        lines += [f"    {f}" for f in rep.failures[:5]]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if rep.ok else EXIT_NO


def run_search(args) -> int:
    from .verify.search import remark_420_scan, search_cline, search_cline_explicit

    if args.question == "cline":
        if args.a or args.b or args.d:
            x = _load_operands(argparse.Namespace(**{**vars(args), "op": "search"}), "abd")
            report = search_cline_explicit(x["a"], x["b"], x["d"])
        else:
            if not args.universe:
                raise UsageError("search cline needs --universe or --a/--b/--d")
            report = search_cline(_universe(args), args.jobs, args.limit)
        if args.format == "machine":
            _emit(dumps(report), args.out)
        else:
            lines = [f"triples scanned {report.scanned}; both inverses exist {report.both_exist}; "
                     f"formula holds {report.holds_count}; formula fails {report.fails_count}"]
            for kind, items in (("holds", report.holds), ("fails", report.fails)):
                for i in items:
                    lines.append(f"  formula-{kind}: a={i.a} b={i.b} d={i.d}: (ab)^||d = {i.ab_along}, "
                                 f"a((ba)^||d)^2 b = {i.formula}")
            lines.append(f"note: {report.note}")
            _emit("\n".join(lines) + "\n", args.out)
        return EXIT_OK
    if args.question == "remark-420":
        if not args.universe:
            raise UsageError("remark-420 needs --universe")
        report = remark_420_scan(_universe(args), args.limit)
        if args.format == "machine":
            _emit(dumps(report), args.out)
        else:
            _emit(f"pairs scanned {report.pairs_scanned}; instances {len(report.instances)}\nnote: {report.note}\n",
                  args.out)
        return EXIT_NO if report.instances or report.oracle_disagreements else EXIT_OK
    raise UsageError(f"unknown question {args.question!r}")


def run_oracle(args) -> int:
    if args.tag not in TAGS:
        raise UsageError(f"unknown tag {args.tag!r}; expected one of {', '.join(TAGS)}")
    u = _universe(args)
    if u.monoid is None:
        raise UsageError("oracle needs a finite universe (gf:p:n or table:FILE)")
    M = u.monoid
    subjects = [_table_element(M, s).id for s in args.subjects]
    sol = exhaustive_solutions(M, args.tag, *subjects, allow_large=True)
    body = {"tag": sol.tag, "subjects": list(sol.subjects), "solutions": list(sol.solutions),
            "labels": [M.label(i) for i in sol.solutions], "count": len(sol)}
    if args.format == "machine":
        _emit(dumps(body), args.out)
    else:
        _emit(f"{args.tag} of {[M.label(i) for i in subjects]}: {len(sol)} solution(s)\n"
              + "".join(f"  {i}: {M.label(i)}\n" for i in sol.solutions), args.out)
    return EXIT_OK if len(sol) else EXIT_NO


# -- argument parsing --------------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--out", help="write the report here instead of stdout")


def _operands(p: argparse.ArgumentParser, names: str) -> None:
    for n in names:
        p.add_argument(f"--{n}", help=f"matrix file for {n} (or element id/label with --table)")
    p.add_argument("--table", help="monoid table file; operands are then element ids or labels")


def _universe_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--universe", help="gf:p:n, gf:p:n:random, qi:n:random or table:FILE")
    p.add_argument("--samples", type=int, help="sample size (required for random universes)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geninv", description="Exact generalized inverses along an element.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("compute", help="compute an inverse")
    p.add_argument("op", choices=COMPUTE_OPS)
    _operands(p, "abd")
    _common(p)

    p = sub.add_parser("check", help="decide a property")
    p.add_argument("op", choices=CHECK_OPS)
    _operands(p, "abde")
    _common(p)

    p = sub.add_parser("verify", help="run registry entries over a universe")
    p.add_argument("--theorem", help="registry id, comma-separated ids, or 'all'")
    p.add_argument("--list", action="store_true", help="list registry entries")
    p.add_argument("--properties", action="store_true", help="run the seeded random-matrix property suite")
    p.add_argument("--jobs", type=int, default=1)
    _universe_flags(p)
    _common(p)

    p = sub.add_parser("search", help="gather evidence on open questions")
    p.add_argument("--question", choices=("cline", "remark-420"), required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--limit", type=int, default=20, help="instances listed per class")
    _operands(p, "abd")
    _universe_flags(p)
    _common(p)

    p = sub.add_parser("oracle", help="exhaustive solution sets on a finite universe")
    p.add_argument("--tag", required=True)
    p.add_argument("--subjects", nargs="+", required=True, help="element ids or labels")
    _universe_flags(p)
    _common(p)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.verb in ("compute", "check"):
            if args.op in RING_ONLY and args.table:
                raise UsageError(f"{args.op} uses addition and needs matrix operands, not table elements")
            x = _load_operands(args, NEEDS[args.op])
            r = (compute if args.verb == "compute" else check)(args.op, x)
            _emit(render_result(r, args.format), args.out)
            return r.exit_code
        if args.verb == "verify":
            return run_verify(args)
        if args.verb == "search":
            return run_search(args)
        return run_oracle(args)
    except (UsageError, FormatError, ScalarParseError, MonoidError, CapExceeded, ShapeError, ValueError,
            FileNotFoundError, IsADirectoryError, inv.TierError) as exc:
        print(f"geninv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
