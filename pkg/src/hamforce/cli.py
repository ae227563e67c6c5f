"""Command-line interface over edge-list files.

Verbs: check, closure, hforce, hamcycle, oracle, gen, bench.  Input is
an edge-list file (``-`` for stdin); ``--json`` switches to machine
output.  Exit codes: 0 success, 1 domain errors (not an OTG, oracle
size cap, too few vertices), 2 usage and parse errors.  Diagnostics go
to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import fit_loglog_slope, run_bench
from .classify import classify
from .closure import bc_closure, weak_closure
from .families import (
    gen_complete_bipartite,
    gen_g21,
    gen_phi1,
    gen_phi3_regular,
    gen_psi,
    gen_random_otg,
)
from .graph import EdgeListParseError, Graph, format_edgelist, parse_edgelist
from .oracle import OracleSizeError, enumerate_cycles, is_hforce, min_hforce
from .ore import NotAnOtgError, check_otg, hamiltonian_cycle

__all__ = ["main"]


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _load(path: str) -> Graph:
    if path == "-":
        return parse_edgelist(sys.stdin.read())
    return parse_edgelist(Path(path).read_text())


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _cmd_check(args) -> int:
    g = _load(args.input)
    report = check_otg(g)
    if args.json:
        witness = list(report.witness) if report.witness else None
        _emit_json({"n": g.n, "is_otg": report.is_otg, "witness": witness})
    elif report.is_otg:
        print(f"OTG: every nonadjacent pair of the {g.n} vertices has degree sum >= {g.n}")
    else:
        u, v = report.witness
        print(
            f"not an OTG: vertices {u} and {v} are nonadjacent with degree sum "
            f"{g.degree(u) + g.degree(v)} < {g.n}"
        )
    return 0 if report.is_otg else 1


def _cmd_closure(args) -> int:
    g = _load(args.input)
    trace = weak_closure(g) if args.threshold == "weak" else bc_closure(g)
    if args.json:
        _emit_json(
            {
                "threshold": trace.threshold,
                "added": [list(e) for e in trace.added_edges],
                "result_edges": [list(e) for e in trace.result.edges()],
            }
        )
    else:
        print(f"threshold {trace.threshold}: added {len(trace.added_edges)} edges")
        for u, v in trace.added_edges:
            print(f"  + {u} {v}")
        closed = "complete" if trace.result.is_complete() else "not complete"
        print(f"result: {trace.result.edge_count()} edges ({closed})")
    return 0


def _cmd_hforce(args) -> int:
    g = _load(args.input)
    result = classify(g)
    if args.json:
        _emit_json(
            {
                "n": g.n,
                "is_otg": True,
                "h": result.h,
                "class": result.phi_class,
                "hforce_set": sorted(result.hforce_set),
                "closure_added": [list(e) for e in result.closure.added_edges],
            }
        )
    else:
        members = ",".join(str(v) for v in sorted(result.hforce_set))
        print(
            f"n={g.n} h={result.h} class={result.phi_class} set={members} "
            f"(closure added {len(result.closure.added_edges)} edges)"
        )
    return 0


def _cmd_hamcycle(args) -> int:
    g = _load(args.input)
    cycle = hamiltonian_cycle(g)
    if args.json:
        _emit_json({"n": g.n, "cycle": list(cycle)})
    else:
        print(" ".join(str(v) for v in cycle))
    return 0


def _parse_vertex_set(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok != ""]
    except ValueError:
        raise _UsageError(f"--set expects comma-separated integers, got {text!r}") from None


class _UsageError(Exception):
    pass


def _cmd_oracle(args) -> int:
    g = _load(args.input)
    if args.oracle_op == "min":
        report = min_hforce(g)
        _emit_json(
            {
                "n": g.n,
                "is_hamiltonian_graph": report.is_hamiltonian_graph,
                "min_h": report.min_h,
                "min_set": sorted(report.min_set),
                "nonhamiltonian_cycles": [list(c) for c in report.nonhamiltonian_cycles],
            }
        )
    elif args.oracle_op == "hforce":
        members = _parse_vertex_set(args.set)
        _emit_json({"n": g.n, "set": sorted(set(members)), "is_hforce": is_hforce(g, members)})
    else:
        cycles = enumerate_cycles(g)
        payload = {"n": g.n, "count": len(cycles)}
        if not args.count_only:
            payload["cycles"] = [list(c) for c in cycles]
        _emit_json(payload)
    return 0


def _parse_pair_list(text: str) -> list[tuple[int, int]]:
    pairs = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        left, dash, right = token.partition("-")
        if not dash:
            raise _UsageError(f"edge token {token!r} is not of the form u-v")
        try:
            pairs.append((int(left), int(right)))
        except ValueError:
            raise _UsageError(f"edge token {token!r} is not of the form u-v") from None
    return pairs


def _cmd_gen(args) -> int:
    try:
        if args.family == "phi1":
            g = gen_phi1(args.n, args.m)
            label = f"phi1 n={args.n} m={args.m}"
        elif args.family == "g21":
            g = gen_g21(args.m)
            label = f"g21 m={args.m}"
        elif args.family == "kb":
            g = gen_complete_bipartite(args.k)
            label = f"complete bipartite k={args.k}"
        elif args.family == "psi":
            g = gen_psi(args.m, _parse_pair_list(args.z_edges))
            label = f"psi m={args.m}"
        elif args.family == "phi3":
            g = gen_phi3_regular(args.n, args.m, _parse_pair_list(args.z_edges))
            label = f"phi3 n={args.n} m={args.m}"
        else:
            g = gen_random_otg(args.n, args.seed)
            label = f"random OTG n={args.n} seed={args.seed}"
    except ValueError as exc:
        _err(f"gen: {exc}")
        return 2
    sys.stdout.write(format_edgelist(g, comment=label))
    return 0


def _cmd_bench(args) -> int:
    if args.max_n < 5:
        _err("bench: --max-n must be at least 5")
        return 2
    if args.samples < 1:
        _err("bench: --samples must be at least 1")
        return 2
    rows = run_bench(args.max_n, args.samples, args.seed)
    print("n,median_ns,edges")
    for row in rows:
        print(f"{row.n},{row.median_ns},{row.edges}")
    if len(rows) >= 2:
        _err(f"fitted log-log slope: {fit_loglog_slope(rows):.3f}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamforce",
        description="Forcing sets of graphs satisfying Ore's condition",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_input(p):
        p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("check", help="test Ore's degree condition")
    add_input(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", help="compute a degree-sum closure with its trace")
    add_input(p)
    p.add_argument("--threshold", choices=("weak", "bc"), default="weak")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("hforce", help="forcing number, one minimum set, and class")
    add_input(p)
    p.set_defaults(func=_cmd_hforce)

    p = sub.add_parser("hamcycle", help="construct a Hamiltonian cycle of an OTG")
    add_input(p)
    p.set_defaults(func=_cmd_hamcycle)

    p = sub.add_parser("oracle", help="brute-force ground truth (JSON output)")
    osub = p.add_subparsers(dest="oracle_op", required=True)
    q = osub.add_parser("min", help="exact minimum forcing set")
    q.add_argument("input")
    q = osub.add_parser("hforce", help="test whether --set is a forcing set")
    q.add_argument("input")
    q.add_argument("--set", required=True, help="comma-separated vertices, e.g. 0,1,2")
    q = osub.add_parser("cycles", help="enumerate all cycles")
    q.add_argument("input")
    q.add_argument("--count-only", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="emit a family member as an edge list")
    gsub = p.add_subparsers(dest="family", required=True)
    q = gsub.add_parser("phi1")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("g21")
    q.add_argument("--m", type=int, required=True)
    q = gsub.add_parser("kb")
    q.add_argument("--k", type=int, required=True)
    q = gsub.add_parser("psi")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--z-edges", default="", help="comma-separated u-v pairs, e.g. 0-1,1-2")
    q = gsub.add_parser("phi3")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--z-edges", default="", help="comma-separated u-v pairs")
    q = gsub.add_parser("random")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="runtime scaling of classification (CSV)")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--samples", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        _err(f"error: {exc}")
        return 2
    except EdgeListParseError as exc:
        _err(f"parse error: {exc}")
        return 2
    except FileNotFoundError as exc:
        _err(f"cannot read {exc.filename}: no such file")
        return 2
    except IsADirectoryError as exc:
        _err(f"cannot read {exc.filename}: is a directory")
        return 2
    except (NotAnOtgError, OracleSizeError) as exc:
        _err(str(exc))
        return 1
    except ValueError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
