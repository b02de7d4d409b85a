"""Command-line front end: ``python -m zmoufang <command> ...``.

Exit status is 0 on success, 1 when a verification or check fails and 2 on
usage errors (bad q, kind/q mismatch, unknown check id).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .constructions import build_projective_line, build_report, build_suzuki, field_degree, partition_classify, partition_sizes
from .field import FieldSpec
from .lemmas import list_checks, run_suite
from .moufang import MoufangSet, ZeroElementError
from .perm import ClosureCapExceeded, group_order, parse_permutations

SCHREIER_FROM_Q = 32


class UsageError(Exception):
    pass


def _build(kind: str, q: int, verify: bool = False) -> MoufangSet:
    try:
        if kind == "psl2":
            return build_projective_line(q, verify=verify)
        return build_suzuki(q, verify=verify)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload, text: str) -> None:
    if args.output == "machine":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def cmd_field(args) -> int:
    try:
        n = field_degree(args.q)
        spec = FieldSpec.tits_field(n) if args.tits else FieldSpec(n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = spec.to_dict()
    text = f"GF({spec.order}) modulus={bin(spec.modulus)} theta=x^(2^{spec.theta_exponent})"
    _emit(args, d, text)
    return 0


def cmd_build(args) -> int:
    M = _build(args.kind, args.q)
    rep = build_report(M)
    lines = [f"{k}: {v}" for k, v in rep.items()]
    _emit(args, rep, "\n".join(lines))
    return 0


def cmd_verify(args) -> int:
    M = _build(args.kind, args.q)
    rep = M.verify_moufang()
    payload = {"passed": rep.passed, "cases": rep.cases, "distinct_maps": rep.distinct_maps}
    if rep.counterexample:
        payload["counterexample"] = rep.counterexample
    status = "PASS" if rep.passed else f"FAIL {rep.counterexample}"
    _emit(args, payload, f"Moufang axiom: {status} ({rep.cases} Hua maps, {rep.distinct_maps} distinct)")
    return 0 if rep.passed else 1


def cmd_mu(args) -> int:
    M = _build(args.kind, args.q)
    try:
        a = M.U.parse(args.a).index
        m = M.mu(a)
    except (ValueError, ZeroElementError) as exc:
        raise UsageError(str(exc)) from None
    images = [M.fmt(x) for x in m.images]
    payload = {
        "a": M.fmt(a),
        "images": dict(zip([M.fmt(x) for x in range(M.npoints)], images)),
        "sim": M.fmt(M.sim_table[a]),
        "special": M.is_special(a),
        "order": m.order(),
    }
    body = "\n".join(f"  {p} -> {img}" for p, img in payload["images"].items())
    text = f"mu_{payload['a']}  (order {payload['order']}, ~a = {payload['sim']}, special: {payload['special']})\n{body}"
    _emit(args, payload, text)
    return 0


def cmd_partition(args) -> int:
    if args.kind != "suzuki":
        raise UsageError("the partition is defined for --kind suzuki")
    M = _build("suzuki", args.q)
    if args.element:
        try:
            cls = partition_classify(M, M.U.parse(args.element))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = {"element": args.element, "class": cls.tag.value, "decomposition": cls.decomposition}
        extra = f" (s, t) = {cls.decomposition}" if cls.decomposition else ""
        _emit(args, payload, f"{args.element}: {cls.tag.value}{extra}")
        return 0
    sizes = partition_sizes(M)
    _emit(args, sizes, " ".join(f"{k}={v}" for k, v in sizes.items()))
    return 0


def cmd_order(args) -> int:
    if args.generators:
        text = sys.stdin.read() if args.generators == "-" else open(args.generators).read()
        try:
            header, gens = parse_permutations(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if not gens:
            raise UsageError("no generators found")
        strategy = args.strategy or ("schreier" if len(gens[0].images) > 200 else "naive")
        inf = gens[0].degree - 1
        try:
            order = group_order(gens, strategy, base=(inf, 0, 1))
        except ClosureCapExceeded as exc:
            raise UsageError(f"{exc}; use --strategy schreier") from None
        source = args.generators
    else:
        M = _build(args.kind, args.q)
        strategy = args.strategy or ("schreier" if args.kind == "suzuki" and args.q >= SCHREIER_FROM_Q else "naive")
        try:
            order = M.group_order(strategy)
        except ClosureCapExceeded as exc:
            raise UsageError(f"{exc}; use --strategy schreier") from None
        source = f"{args.kind} q={args.q}"
    _emit(args, {"order": order, "strategy": strategy, "source": source}, str(order))
    return 0


def cmd_export(args) -> int:
    M = _build(args.kind, args.q)
    text = M.export_generators()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_suite(args) -> int:
    if args.list:
        rows = [{"check_id": i, "anchor": a, "applicability": ap} for i, a, ap in list_checks()]
        _emit(args, rows, "\n".join(f"{r['check_id']:<14} {r['anchor']}" for r in rows))
        return 0
    M = _build(args.kind, args.q)
    ids = None
    if args.checks:
        ids = [s.strip() for s in args.checks.split(",") if s.strip()]
    try:
        report = run_suite(M, ids, jobs=args.jobs)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    if args.output == "machine":
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def _q(text: str) -> int:
    try:
        q = int(text)
        field_degree(q)
    except ValueError:
        raise argparse.ArgumentTypeError(f"q must be a power of 2, got {text!r}") from None
    return q


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zmoufang", description="Finite Zassenhaus Moufang sets over GF(2^n).")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, kind=True, q_required=True):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--q", type=_q, required=q_required, help="field size, a power of 2")
        if kind:
            sp.add_argument("--kind", choices=["psl2", "suzuki"], default="suzuki")
        sp.add_argument("--output", choices=["text", "machine"], default="text")
        sp.set_defaults(func=fn)
        return sp

    f = add("field", cmd_field, "describe GF(q) and its twisting automorphism", kind=False)
    f.add_argument("--tits", action="store_true", help="use the Tits automorphism (n odd)")
    add("build", cmd_build, "build a Moufang set and print its report")
    add("verify", cmd_verify, "check the Moufang axiom exhaustively")
    m = add("mu", cmd_mu, "print the mu-map of an element")
    m.add_argument("--a", required=True, help='element, "a" or "(a,b)"')
    pt = add("partition", cmd_partition, "Suzuki partition sizes or the class of one element")
    pt.add_argument("--element", help='classify a single "(a,b)"')
    o = add("order", cmd_order, "order of the little projective group", q_required=False)
    o.add_argument("--strategy", choices=["naive", "schreier"])
    o.add_argument("--generators", help="close exported generators from this file ('-' for stdin)")
    e = add("export", cmd_export, "write generators of the little projective group")
    e.add_argument("--out", help="file to write instead of standard output")
    s = add("suite", cmd_suite, "run the identity checks", q_required=False)
    s.add_argument("--checks", help="comma-separated check ids (default: all)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--list", action="store_true", help="list registered checks and exit")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "order" and args.q is None and not args.generators:
        parser.error("order needs --q or --generators")
    if args.command == "suite" and args.q is None and not args.list:
        parser.error("suite needs --q")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"zmoufang: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
