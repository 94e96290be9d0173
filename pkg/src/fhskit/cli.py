"""Command-line front end.

Exit codes: 0 success, 2 input/parameter error, 3 unsupported construction
case, 4 search guard exceeded.  Sequences travel as JSON objects
{"l": <int>, "seq": [<int>, ...]}; correlation profiles leave as CSV.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, gapbound, oracle, seeds
from .errors import ParameterError, SearchSpaceError, UnsupportedCaseError
from .report import render_table2, table_row_for, verify_sequence
from .sequence import Fhs, auto_profile, cross_profile, max_auto

RECURSIVE_CONSTRAINTS = "gcd(l,d1)=gcd(l,d2)=gcd(l,d2-d1)=m"
RECURSIVE_GAP_CONSTRAINTS = RECURSIVE_CONSTRAINTS + ", d1+d2<l-m+2"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise ParameterError(f"expected a comma-separated integer list, got {text!r}") from None


def _read_json(path: str):
    try:
        raw = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise ParameterError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"malformed JSON in {path}: {exc}") from None


def _load_fhs(path: str) -> Fhs:
    obj = _read_json(path)
    if isinstance(obj, dict) and "fhs" in obj:
        obj = obj["fhs"]  # accept whole construction outputs, not just bare sequences
    return Fhs.from_json_dict(obj)


def _dump(obj, args) -> str:
    if isinstance(obj, str):
        return obj
    if getattr(args, "json", False):
        return json.dumps(obj, separators=(",", ":")) + "\n"
    return json.dumps(obj, indent=2) + "\n"


def _construction_output(fhs: Fhs, params: dict, claims: dict, constraints: str | None):
    out = {
        "fhs": fhs.to_json_dict(),
        "construction": params,
        "claims": claims,
        "verification": verify_sequence(fhs).to_json_dict(),
    }
    if constraints is not None:
        out["constraints"] = constraints
    return out


def _cmd_construct(args):
    if args.family == "pair":
        offsets = _ints(args.offsets) if args.offsets else (0, 0)
        if len(offsets) != 2:
            raise ParameterError("pair construction takes exactly two offsets")
        params = construct.PairParams(args.l, args.d1, args.d2, offsets[0], offsets[1])
        fhs = construct.construct_pair(params)
        claims = {"max_auto": 2, "min_gap": params.guaranteed_gap}
        return _construction_output(
            fhs,
            {"kind": "pair", "l": args.l, "d1": args.d1, "d2": args.d2, "offsets": list(offsets)},
            claims,
            "d1,d2 in DU(Z_l)",
        )
    if args.family == "triple":
        if args.d3 is None:
            raise ParameterError("triple construction needs --d3")
        offsets = _ints(args.offsets) if args.offsets else (0, 0, 0)
        params = construct.TripleParams(args.l, args.d1, args.d2, args.d3)
        fhs = construct.construct_triple(params, offsets, unchecked=args.unchecked)
        guaranteed = offsets == (0, 0, 0)
        claims = {
            "max_auto": 3 if guaranteed else None,
            "min_gap": params.guaranteed_gap if guaranteed else None,
        }
        return _construction_output(
            fhs,
            {
                "kind": "triple",
                "l": args.l,
                "d1": args.d1,
                "d2": args.d2,
                "d3": args.d3,
                "offsets": list(offsets),
            },
            claims,
            "d1,d2,d3 in DU(Z_l)",
        )
    # recursive
    if args.pi is None:
        raise ParameterError("recursive construction needs --pi")
    pi = _ints(args.pi)
    params = construct.RecursiveParams(args.l, args.d1, args.d2, pi)
    if args.shift_k:
        fhs = construct.construct_recursive_shifted(params, args.shift_k)
    else:
        fhs = construct.construct_recursive(params)
    order_h = max_auto(params.order_seq.as_fhs())
    has_gap = construct.gap_condition(args.l, args.d1, args.d2)
    claims = {
        "max_auto": order_h,
        "min_gap": (args.d1 - 1) if has_gap and not args.shift_k else None,
    }
    return _construction_output(
        fhs,
        {
            "kind": "recursive",
            "l": args.l,
            "d1": args.d1,
            "d2": args.d2,
            "m": params.m,
            "pi": list(pi),
            "shift_k": args.shift_k,
        },
        claims,
        RECURSIVE_GAP_CONSTRAINTS if has_gap else RECURSIVE_CONSTRAINTS,
    )


def _build_seed(args) -> tuple[Fhs, dict]:
    if args.seed_kind == "b1":
        if args.N is None:
            raise ParameterError("b1 seed needs --N")
        params = seeds.B1Params(
            N=args.N,
            k=args.k,
            phi=_ints(args.phi) if args.phi else None,
            epsilon=_ints(args.epsilon) if args.epsilon else None,
            gamma=_ints(args.gamma) if args.gamma else None,
        )
        return seeds.b1_construct(params), {"kind": "b1", "N": args.N, "k": args.k}
    if args.seed_kind == "cyclotomic":
        if args.p is None or args.modulus is None or args.e is None:
            raise ParameterError("cyclotomic seed needs --p, --modulus, and --e")
        ctx = seeds.GfContext(args.p, _ints(args.modulus))
        params = seeds.CyclotomyParams(ctx, args.e, args.special_log)
        return (
            seeds.cyclotomic_construct(params),
            {"kind": "cyclotomic", "q": ctx.q, "e": args.e, "f": params.f},
        )
    if args.seed_kind == "qr":
        if args.p is None or args.b is None or args.x is None:
            raise ParameterError("qr seed needs --p, --b, and --x")
        b = _ints(args.b)
        params = seeds.QrParams(args.p, len(b), b, _ints(args.x), args.alpha)
        return seeds.qr_construct(params), {"kind": "qr", "p": args.p, "k": len(b)}
    raise ParameterError(f"unknown seed kind {args.seed_kind!r}")


def _cmd_seed(args):
    fhs, meta = _build_seed(args)
    return _construction_output(fhs, meta, {"max_auto": None, "min_gap": None}, None)


def _cmd_pipeline(args):
    seed, meta = _build_seed(args)
    u = seeds.pipeline_seed_to_wgfhs(seed, args.l, args.d1, args.d2, args.lift_index)
    m = seed.alphabet_size
    pi = construct.lift_at_index(construct.OrderSeq(m, seed.symbols), args.lift_index)
    has_gap = construct.gap_condition(args.l, args.d1, args.d2)
    out = _construction_output(
        u,
        {
            "kind": "pipeline",
            "seed": meta,
            "l": args.l,
            "d1": args.d1,
            "d2": args.d2,
            "m": m,
            "lift_index": args.lift_index,
        },
        {"max_auto": 2, "min_gap": (args.d1 - 1) if has_gap else None},
        RECURSIVE_GAP_CONSTRAINTS if has_gap else RECURSIVE_CONSTRAINTS,
    )
    out["seed_fhs"] = seed.to_json_dict()
    out["pi"] = list(pi)
    return out


def _cmd_verify(args):
    fhs = _load_fhs(args.input)
    return verify_sequence(fhs).to_json_dict()


def _cmd_profile(args):
    first = _load_fhs(args.input)
    if args.second:
        profile = cross_profile(first, _load_fhs(args.second))
        start = 0
    else:
        profile = auto_profile(first)
        start = 1
    lines = ["tau,H"]
    lines += [f"{tau},{profile.values[tau]}" for tau in range(start, profile.length)]
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args):
    if args.what == "pim":
        if args.m is None:
            raise ParameterError("enumerate pim needs --m")
        return oracle.enumerate_optimal_order_seqs(args.m).to_json_dict()
    if args.l is None:
        raise ParameterError("enumerate du needs --l")
    sets = oracle.enumerate_du_sets(args.l)
    return {"l": args.l, "sets": [list(d.elements) for d in sets]}


def _cmd_gapbound(args):
    case = gapbound.gap_upper_bound(args.n, args.l)
    out = {"n": case.n, "l": case.l, "case": case.case, "bound": case.bound}
    if args.build:
        out["fhs"] = gapbound.extremal_sequence(args.n, args.l).to_json_dict()
    return out


def _cmd_search(args):
    best = oracle.exhaustive_max_min_gap(args.n, args.l)
    out = {"n": args.n, "l": args.l, "max_min_gap": best}
    if args.l >= 3:
        case = gapbound.gap_upper_bound(args.n, args.l)
        out["bound"] = {"case": case.case, "bound": case.bound}
    return out


def _cmd_table2(args):
    rows = []
    for path in args.inputs:
        obj = _read_json(path)
        if isinstance(obj, dict) and "fhs" in obj:
            fhs = Fhs.from_json_dict(obj["fhs"])
            label = obj.get("construction", {}).get("kind", path)
            rows.append(table_row_for(fhs, obj.get("constraints"), label))
        elif isinstance(obj, dict) and "seq" in obj:
            rows.append(table_row_for(Fhs.from_json_dict(obj), label=path))
        elif isinstance(obj, dict):
            rows.append(obj)
        else:
            raise ParameterError(f"{path}: expected a sequence, construction output, or row object")
    return render_table2(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fhskit", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact machine-readable output")
    common.add_argument("--out", help="write output to a file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("construct", help="build a sequence from one of the construction families")
    p.add_argument("family", choices=("pair", "triple", "recursive"))
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--d3", type=int)
    p.add_argument("--offsets", help="comma-separated per-block offsets")
    p.add_argument("--unchecked", action="store_true", help="allow offsets that void the guarantees")
    p.add_argument("--pi", help="comma-separated permutation image list")
    p.add_argument("--shift-k", dest="shift_k", type=int, default=0)
    p.set_defaults(func=_cmd_construct)

    def add_seed_flags(q):
        q.add_argument("--N", type=int)
        q.add_argument("--k", type=int, default=2)
        q.add_argument("--phi")
        q.add_argument("--epsilon")
        q.add_argument("--gamma")
        q.add_argument("--p", type=int)
        q.add_argument("--modulus", help="field modulus polynomial, ascending coefficients")
        q.add_argument("--e", type=int)
        q.add_argument("--special-log", dest="special_log", type=int)
        q.add_argument("--b", help="binary block pattern, comma-separated")
        q.add_argument("--x", help="residue picks, comma-separated")
        q.add_argument("--alpha", type=int)

    p = add_parser("seed", help="generate a known optimal uniform seed sequence")
    p.add_argument("seed_kind", choices=("b1", "cyclotomic", "qr"))
    add_seed_flags(p)
    p.set_defaults(func=_cmd_seed)

    p = add_parser("pipeline", help="seed -> lift -> recursive construction")
    p.add_argument("--seed", dest="seed_kind", choices=("b1", "cyclotomic", "qr"), required=True)
    add_seed_flags(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--d1", type=int, required=True)
    p.add_argument("--d2", type=int, required=True)
    p.add_argument("--lift-index", dest="lift_index", type=int, default=0)
    p.set_defaults(func=_cmd_pipeline)

    p = add_parser("verify", help="measure all metrics of a sequence JSON")
    p.add_argument("input", nargs="?", default="-", help="path or - for stdin")
    p.set_defaults(func=_cmd_verify)

    p = add_parser("profile", help="emit a correlation profile as CSV")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--second", help="second sequence for a cross profile")
    p.set_defaults(func=_cmd_profile)

    p = add_parser("enumerate", help="exhaustive enumerations")
    p.add_argument("what", choices=("pim", "du"))
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.set_defaults(func=_cmd_enumerate)

    p = add_parser("gapbound", help="gap upper bound and optional extremal sequence")
    p.add_argument("n", type=int)
    p.add_argument("l", type=int)
    p.add_argument("--build", action="store_true")
    p.set_defaults(func=_cmd_gapbound)

    p = add_parser("search", help="exhaustive searches")
    p.add_argument("what", choices=("gap",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(func=_cmd_search)

    p = add_parser("table2", help="render a comparison table from outputs or row JSONs")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=_cmd_table2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedCaseError as exc:
        print(f"unsupported case: {exc}", file=sys.stderr)
        return 3
    except SearchSpaceError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 4
    text = _dump(result, args)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
