"""Command-line front end.

Subcommands: generate, certify, detect, multipartite, experiment, verify.
Exit codes: 0 success, 1 check failure, 2 usage error, 3 resource refusal
(an exact mode or search budget above its cap).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .certifiers import (
    bipartite_regularity_deviation,
    pair_deviation,
    quad_vertex_deviation,
    weak_deviation,
    xyz_deviation,
)
from .constructions import CONSTRUCTIONS
from .core import CapExceeded, Hypergraph3, Hypergraph4, ParseError, read_hypergraph, write_hypergraph
from .detectors import (
    check_vanishing_condition,
    embed_small,
    find_clique3,
    find_f4,
    find_k4_minus,
    find_sk,
)
from .experiment import ExperimentSpec, run_experiment
from .checks import run_suite
from .multipartite import (
    AuxiliaryHypergraph,
    TripartiteTriples,
    explore_extremal,
    find_three_triples,
    find_triangle_mp,
    half_split,
    mean_square_profile,
    project_auxiliary,
    proof_diagnostics,
    read_multipartite,
    write_multipartite,
)


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return {"num": obj.numerator, "den": obj.denominator,
                "float": float(obj)}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "__dataclass_fields__"):
        return {f: _jsonable(getattr(obj, f)) for f in obj.__dataclass_fields__}
    return obj


def _write_report(path: str | None, payload: dict) -> None:
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    gen = CONSTRUCTIONS[args.construction]
    h = gen(args.n, args.k, args.seed)
    text = write_hypergraph(h)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    dens = h.density()
    print("%s n=%d seed=%d: %d edges, density %.6f"
          % (args.construction, args.n, args.seed, dens.edge_count, dens.density),
          file=sys.stderr)
    return 0


def cmd_certify(args) -> int:
    d = parse_fraction(args.d) if args.d else None
    if args.kind == "bipartite":
        g = read_multipartite(Path(args.infile).read_text(encoding="utf-8"))
        rep = bipartite_regularity_deviation(g, d, mode=args.mode, seed=args.seed)
        meta = {"parts": list(g.sizes[:2])}
    else:
        h = read_hypergraph(Path(args.infile).read_text(encoding="utf-8"))
        if args.kind == "weak":
            rep = weak_deviation(h, d, mode=args.mode, seed=args.seed)
        elif args.kind == "xyz":
            rep = xyz_deviation(h, d, samples=args.samples, seed=args.seed)
        elif args.kind == "pair":
            rep = pair_deviation(h, d, mode=args.mode, seed=args.seed)
        elif args.kind == "quad":
            if not isinstance(h, Hypergraph4):
                raise ValueError("quad deviation needs a 4-uniform input")
            rep = quad_vertex_deviation(h, d, samples=args.samples, seed=args.seed)
        else:
            raise ValueError("unknown kind %r" % args.kind)
        meta = {"n": h.n, "edges": h.edge_count}
    payload = {"schema_version": 1, "input": args.infile, "kind": args.kind,
               "instance": meta, "report": rep}
    _write_report(args.report, payload)
    return 0


def cmd_detect(args) -> int:
    h = read_hypergraph(Path(args.infile).read_text(encoding="utf-8"))
    witness = None
    extra = {}
    if args.pattern == "k4minus":
        witness = find_k4_minus(h, ordered=args.ordered)
    elif args.pattern == "clique":
        witness = find_clique3(h, args.k or 4)
    elif args.pattern == "sk":
        witness = find_sk(h, args.k or 3)
    elif args.pattern == "f4":
        if not isinstance(h, Hypergraph4):
            raise ValueError("f4 detection needs a 4-uniform input")
        witness = find_f4(h)
    elif args.pattern == "custom":
        if not args.pattern_file:
            raise ValueError("custom detection needs --pattern-file")
        pat = read_hypergraph(Path(args.pattern_file).read_text(encoding="utf-8"))
        if not isinstance(pat, Hypergraph3) or not isinstance(h, Hypergraph3):
            raise ValueError("custom embedding works on 3-uniform inputs")
        image = embed_small(pat, h, ordered=args.ordered)
        extra["embedding"] = list(image) if image is not None else None
        witness = image
    elif args.pattern == "vanishing":
        if not isinstance(h, Hypergraph3):
            raise ValueError("vanishing check needs a 3-uniform input")
        w = check_vanishing_condition(h)
        payload = {"schema_version": 1, "input": args.infile,
                   "pattern": args.pattern, "found": w is not None,
                   "witness": ({"order": list(w.order),
                                "colours": {"%d,%d" % k: v
                                            for k, v in w.colours.items()}}
                               if w else None)}
        _write_report(args.report, payload)
        return 0
    else:
        raise ValueError("unknown pattern %r" % args.pattern)
    payload = {"schema_version": 1, "input": args.infile, "pattern": args.pattern,
               "found": witness is not None, "result": _jsonable(witness), **extra}
    _write_report(args.report, payload)
    return 0


def _read_block(path: str) -> TripartiteTriples:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return TripartiteTriples(tuple(data["sizes"]), [tuple(t) for t in data["triples"]])


def _read_auxiliary(path: str) -> AuxiliaryHypergraph:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    sizes = {tuple(int(x) for x in key.split(",")): int(v)
             for key, v in data["class_sizes"].items()}
    blocks = {tuple(int(x) for x in key.split(",")): [tuple(t) for t in triples]
              for key, triples in data.get("blocks", {}).items()}
    return AuxiliaryHypergraph(int(data["m"]), sizes, blocks)


def cmd_multipartite(args) -> int:
    op = args.op
    if op == "halfsplit":
        g = half_split(args.m, args.s)
        text = write_multipartite(g)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
        return 0
    if op == "explore":
        eps = parse_fraction(args.epsilon) if args.epsilon else None
        res = explore_extremal(args.m, args.s, eps_target=eps,
                               restarts=args.restarts, seed=args.seed)
        if args.out:
            Path(args.out).write_text(write_multipartite(res.graph), encoding="utf-8")
        _write_report(args.report, {
            "schema_version": 1, "op": op, "m": args.m, "s": args.s,
            "min_ratio": res.min_ratio, "triangle_free": res.triangle_free,
            "restarts": res.restarts, "accepted_moves": res.accepted_moves})
        return 0
    if op == "project":
        block = _read_block(args.infile)
        eps = parse_fraction(args.epsilon) if args.epsilon else Fraction(0)
        rep = project_auxiliary(block, eps)
        _write_report(args.report, {"schema_version": 1, "op": op, "report": rep})
        return 0
    if op == "threetriples":
        aux = _read_auxiliary(args.infile)
        cfg = find_three_triples(aux)
        payload = {"schema_version": 1, "op": op, "found": cfg is not None}
        if cfg:
            payload["indices"] = list(cfg.indices)
            payload["vertices"] = {"%d,%d" % k: v for k, v in cfg.vertices.items()}
            payload["apex_extreme"] = cfg.apex_extreme
        _write_report(args.report, payload)
        return 0
    g = read_multipartite(Path(args.infile).read_text(encoding="utf-8"))
    if op == "profile":
        eps = parse_fraction(args.epsilon) if args.epsilon else Fraction(0)
        prof = mean_square_profile(g, epsilon=eps)
        payload = {"schema_version": 1, "op": op, "sizes": list(g.sizes),
                   "ratios": {"%d,%d" % k: v for k, v in prof.ratios.items()},
                   "satisfied": {"%d,%d" % k: v for k, v in prof.satisfied.items()},
                   "min_ratio": prof.min_ratio()}
        _write_report(args.report, payload)
        return 0
    if op == "triangle":
        tri = find_triangle_mp(g)
        _write_report(args.report, {"schema_version": 1, "op": op,
                                    "found": tri is not None,
                                    "triangle": _jsonable(tri)})
        return 0
    if op == "diagnostics":
        if not args.delta:
            raise ValueError("diagnostics needs --delta")
        delta = parse_fraction(args.delta)
        eps = parse_fraction(args.epsilon) if args.epsilon else None
        diag = proof_diagnostics(g, delta, eps)
        payload = {"schema_version": 1, "op": op, "r_max": diag.r_max,
                   "q_sizes": {"%d,%d" % k: list(v) for k, v in diag.q_sizes.items()},
                   "r_value": {"%d,%d" % k: v for k, v in diag.r_value.items()},
                   "claim_violations": _jsonable(diag.claim_violations)}
        _write_report(args.report, payload)
        return 0
    raise ValueError("unknown multipartite op %r" % op)


def cmd_experiment(args) -> int:
    spec = ExperimentSpec.from_json(Path(args.spec).read_text(encoding="utf-8"))
    result = run_experiment(spec, threads=args.threads)
    if not spec.csv_path and not spec.json_path:
        if args.format == "json":
            sys.stdout.write(result.to_json())
        else:
            sys.stdout.write(result.to_csv())
    else:
        print("wrote %s%s" % (spec.csv_path or "", " " + spec.json_path
                              if spec.json_path else ""), file=sys.stderr)
    failures = [r for r in result.rows if r["error"]]
    if failures:
        for row in failures:
            print("cell n=%s seed=%s failed: %s"
                  % (row["n"], row["seed"], row["error"]), file=sys.stderr)
        return 1
    return 0


def cmd_verify(args) -> int:
    results = run_suite(args.level)
    failed = [r for r in results if not r.passed]
    print("%d/%d criteria passed" % (len(results) - len(failed), len(results)))
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperq",
        description="Quasirandom hypergraph constructions, certification, "
                    "and forbidden-pattern detection")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common],
                       help="emit a seeded construction")
    p.add_argument("--construction", required=True, choices=sorted(CONSTRUCTIONS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("certify", parents=[common],
                       help="quantify quasirandomness deviations")
    p.add_argument("--kind", required=True,
                   choices=["weak", "xyz", "pair", "quad", "bipartite"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--d", default=None, help="reference density as P/Q")
    p.add_argument("--mode", choices=["exact", "search"], default="exact")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("detect", parents=[common],
                       help="find forbidden configurations")
    p.add_argument("--pattern", required=True,
                   choices=["k4minus", "clique", "sk", "f4", "custom", "vanishing"])
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--ordered", action="store_true")
    p.add_argument("--pattern-file", default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("multipartite", parents=[common],
                       help="multipartite graph operations")
    p.add_argument("--op", required=True,
                   choices=["profile", "triangle", "halfsplit", "diagnostics",
                            "project", "threetriples", "explore"])
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--delta", default=None)
    p.add_argument("--epsilon", default=None)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--out", default=None)
    p.add_argument("--report", default=None)
    p.set_defaults(func=cmd_multipartite)

    p = sub.add_parser("experiment", parents=[common],
                       help="run a sweep from a JSON spec")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", parents=[common],
                       help="run the acceptance suite")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
