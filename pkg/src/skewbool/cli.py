"""Command-line front end.

Exit codes: 0 success (equal/true), 1 unequal/false, 2 usage or input error.
Every subcommand has a deterministic text form; ``--json`` switches to the
machine-readable schemas documented in the README.
"""

from __future__ import annotations

import argparse
import json
import sys

from .decide import decide_equal, decide_equal_nf, decide_leq, decide_preceq, identity_suite
from .free import (Variety, atom_count, element_to_json, eval_term, format_orthosum,
                   free_center_size, free_intersection, free_signature, free_size)
from .models import SXSpace, pfun_iso, sx_verify_free
from .orthosum import center, format_element, format_signature, parse_signature
from .primitive import parse_shape
from .structure import min_generators, rank, rank_table
from .terms import Alphabet, parse, variables

__all__ = ["main"]

# a minimal generating triple for the fourth power of 3L, also shown as
# partial maps {1,2,3,4} -> {1,2}
_DEMO_TRIPLE = ((1, 1, 0, 1), (2, 0, 1, 2), (0, 2, 2, 2))


def _variety(args) -> Variety:
    return Variety.parse(args.variety)


def _alphabet_for(args, *terms):
    if args.alphabet:
        return Alphabet([name.strip() for name in args.alphabet.split(",")])
    names = {}
    for t in terms:
        names.update(dict.fromkeys(variables(t).names))
    return Alphabet(names)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_decide(args) -> int:
    equation = args.equation
    for symbol, fn in (("<<=", decide_preceq), ("<=", decide_leq), ("=", decide_equal)):
        if symbol in equation:
            lhs, rhs = equation.split(symbol, 1)
            relation = symbol
            break
    else:
        raise ValueError("equation must contain '=', '<=' or '<<='")
    t1, t2 = parse(lhs), parse(rhs)
    variety = _variety(args)
    if relation == "=" and args.nf:
        verdict = decide_equal_nf(variety, t1, t2)
    else:
        verdict = fn(variety, t1, t2)
    witness = None
    if verdict.witness is not None:
        witness = {"model": verdict.witness.model,
                   "assignment": verdict.witness.assignment,
                   "left": verdict.witness.left_value,
                   "right": verdict.witness.right_value}
    if verdict.equal:
        _emit(args, {"equal": True, "witness": None}, "equal" if relation == "=" else "holds")
    else:
        text = "unequal" if relation == "=" else "does not hold"
        if verdict.witness is not None:
            text += f"\nwitness: {verdict.witness}"
        _emit(args, {"equal": False, "witness": witness}, text)
    return 0 if verdict.equal else 1


def _cmd_normalize(args) -> int:
    t = parse(args.term)
    variety = _variety(args)
    alphabet = _alphabet_for(args, t)
    e = eval_term(variety, alphabet, t)
    _emit(args, element_to_json(e), format_orthosum(e))
    return 0


def _cmd_free_info(args) -> int:
    variety = _variety(args)
    n = args.n
    sig = free_signature(variety, n)
    size = free_size(variety, n)
    atoms = atom_count(variety, n)
    payload = {"variety": variety.value, "n": n, "size": size, "atoms": atoms,
               "signature": format_signature(sig)}
    _emit(args, payload, f"size {size}, atoms {atoms}, signature {format_signature(sig)}")
    return 0


def _cmd_rank(args) -> int:
    sig = parse_signature(args.sig)
    report = rank(sig)
    binding = None
    if report.binding_constraint is not None:
        b = report.binding_constraint
        binding = {"k": b.k, "n": b.n, "gamma": b.gamma, "required": b.required}
    print(json.dumps({"signature": format_signature(sig),
                      "rank": report.rank,
                      "variety": report.variety.value,
                      "free_cover": format_signature(report.free_cover),
                      "binding_constraint": binding}))
    return 0


def _cmd_ranktable(args) -> int:
    shape = parse_shape(args.shape)
    rows = rank_table(shape, args.max)
    if args.json:
        print(json.dumps({"shape": args.shape,
                          "rows": [{"lo": lo, "hi": hi, "rank": r} for lo, hi, r in rows]}))
    else:
        for lo, hi, r in rows:
            span = str(lo) if lo == hi else f"{lo}-{hi}"
            print(f"rank {r} for powers {span}")
    return 0


def _cmd_mingen(args) -> int:
    sig = parse_signature(args.sig)
    gens = min_generators(sig)
    print(json.dumps({"signature": format_signature(sig),
                      "rank": len(gens),
                      "generators": [list(g) for g in gens]}))
    return 0


def _cmd_intersect(args) -> int:
    t1, t2 = parse(args.term1), parse(args.term2)
    variety = _variety(args)
    alphabet = _alphabet_for(args, t1, t2)
    e = free_intersection(eval_term(variety, alphabet, t1), eval_term(variety, alphabet, t2))
    _emit(args, element_to_json(e), format_orthosum(e))
    return 0


def _cmd_center(args) -> int:
    if args.sig:
        sig = parse_signature(args.sig)
        elements = center(sig)
        payload = {"signature": format_signature(sig), "size": len(elements),
                   "elements": [list(x) for x in elements]}
        text = "\n".join([format_element(sig, x) for x in elements] + [f"size {len(elements)}"])
        _emit(args, payload, text)
        return 0
    if args.n is None:
        raise ValueError("center needs --sig or both --variety and -n")
    variety = _variety(args)
    size = free_center_size(variety, args.n)
    _emit(args, {"variety": variety.value, "n": args.n, "size": size}, f"size {size}")
    return 0


def _cmd_sx_verify(args) -> int:
    space = SXSpace(args.n)
    ok = sx_verify_free(space)
    atoms = args.n << (args.n - 1)
    payload = {"n": args.n, "free": ok, "atoms": atoms}
    text = (f"free on {args.n} generators: {atoms} distinct nonempty atom evaluations"
            if ok else f"not free on {args.n} generators")
    _emit(args, payload, text)
    return 0 if ok else 1


def _cmd_pfun_demo(args) -> int:
    iso = pfun_iso(4, 2)
    maps = [iso.to_pfun(g) for g in _DEMO_TRIPLE]
    if args.json:
        print(json.dumps({"generators": [list(g) for g in _DEMO_TRIPLE],
                          "maps": [{str(k): v for k, v in m.mapping().items()} for m in maps]}))
    else:
        print("generators of 3L^4 as partial maps {1,2,3,4} -> {1,2}:")
        for i, (g, m) in enumerate(zip(_DEMO_TRIPLE, maps), start=1):
            print(f"phi{i} = {m}  <->  {format_element(iso.signature, g)}")
    return 0


def _cmd_identities(args) -> int:
    checks = identity_suite()
    order = [Variety.LSBA, Variety.RSBA, Variety.SBA, Variety.GBA]
    if args.json:
        print(json.dumps([{"name": c.name, "equation": c.equation,
                           "results": {v.value: c.results[v] for v in order},
                           "expected": sorted(v.value for v in c.expected),
                           "ok": c.ok} for c in checks]))
    else:
        header = f"{'identity':40} " + " ".join(f"{v.value:>5}" for v in order)
        print(header)
        for c in checks:
            cells = " ".join(f"{'pass' if c.results[v] else 'fail':>5}" for v in order)
            flag = "" if c.ok else "  <- unexpected"
            print(f"{c.name:40} {cells}{flag}")
    return 0 if all(c.ok for c in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewbool",
                                     description="skew Boolean algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=fn)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    p = add("decide", _cmd_decide, help="decide equality or order of two terms")
    p.add_argument("--variety", required=True, help="lsba, rsba, sba or gba")
    p.add_argument("--nf", action="store_true", help="use the normal-form route")
    p.add_argument("equation", help="e.g. 'x & y = y & x', also <= and <<=")

    p = add("normalize", _cmd_normalize, help="atomic normal form of a term")
    p.add_argument("--variety", required=True)
    p.add_argument("--alphabet", help="comma-separated variables fixing atom order")
    p.add_argument("term")

    p = add("free-info", _cmd_free_info, help="size, atom count and signature of a free algebra")
    p.add_argument("--variety", required=True)
    p.add_argument("-n", type=int, required=True, help="number of generators")

    p = add("rank", _cmd_rank, help="rank and free cover of a signature")
    p.add_argument("--sig", required=True)

    p = add("ranktable", _cmd_ranktable, help="rank ranges for powers of one shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--max", type=int, required=True)

    p = add("mingen", _cmd_mingen, help="synthesize a minimal generating set")
    p.add_argument("--sig", required=True)

    p = add("intersect", _cmd_intersect, help="intersection of two terms as free elements")
    p.add_argument("--variety", required=True)
    p.add_argument("--alphabet")
    p.add_argument("term1")
    p.add_argument("term2")

    p = add("center", _cmd_center, help="center of a finite or free algebra")
    p.add_argument("--sig")
    p.add_argument("--variety", default="lsba")
    p.add_argument("-n", type=int)

    p = add("sx-verify", _cmd_sx_verify, help="check freeness of the section model")
    p.add_argument("-n", type=int, required=True)

    add("pfun-demo", _cmd_pfun_demo, help="minimal generators of 3L^4 as partial maps")

    add("identities", _cmd_identities, help="run the identity battery in every variety")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
