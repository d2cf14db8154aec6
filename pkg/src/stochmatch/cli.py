"""Command-line front end: instance generation, sparsification, estimation,
batch experiments and the verification suites.

Exit codes: 0 success, 1 hard-check failure, 2 usage or I/O error.
All outputs are pure functions of (inputs, flags, seed); no timestamps.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .graph import Graph, EdgeSet
from .instances import (HardInstanceSpec, complete_bipartite, complete_graph,
                        erdos_renyi, hard_instance, hard_instance_metadata,
                        load_edge_list, save_edge_list, write_metadata_sidecar)
from .simulate import estimate_expected_matching, estimate_ratio
from .sparsify import SparsifierConfig, sparsify_auto, sparsify_large_p, sparsify_small_p
from .verify import SUITE_NAMES, run_suite

CSV_HEADER = ("instance,n,m,p,branch,rounds,max_degree,opt_mean,opt_stderr,"
              "alg_mean,alg_stderr,ratio,ratio_stderr,pass")


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...] = ()
    p: float = 0.5
    p_values: tuple[float, ...] = ()
    p0: float = 0.1
    algorithm: str = "auto"
    trials: int = 1000
    seed: int = 0
    rounds_multiplier: float = 2.0
    output: str | None = None
    fmt: str = "json"

    def __post_init__(self):
        if not 0 < self.p < 1:
            raise ValueError("p must be in (0, 1)")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.fmt not in ("csv", "json"):
            raise ValueError("format must be csv or json")


def _sparsifier_for(cfg: RunConfig, p: float) -> SparsifierConfig:
    return SparsifierConfig(p=p, p0=cfg.p0, round_multiplier=cfg.rounds_multiplier,
                            seed=cfg.seed)


def _run_algorithm(g: Graph, cfg: RunConfig, p: float):
    sp = _sparsifier_for(cfg, p)
    if cfg.algorithm == "small-p":
        return sparsify_small_p(g, sp)
    if cfg.algorithm == "large-p":
        return sparsify_large_p(g, sp)
    return sparsify_auto(g, sp)


def cmd_gen(args) -> int:
    if args.family == "er":
        g = erdos_renyi(args.n, args.q, args.seed)
    elif args.family == "complete":
        g = complete_graph(args.n)
    elif args.family == "complete-bipartite":
        g = complete_bipartite(args.a, args.b)
    else:  # hard
        spec = HardInstanceSpec(N=args.N, p=args.p, cstar=args.cstar, seed=args.seed)
        g = hard_instance(spec)
        save_edge_list(g, args.output)
        write_metadata_sidecar(hard_instance_metadata(spec, g),
                               args.output + ".meta.json")
        print(f"wrote {args.output} (n={g.n}, m={g.m}) and sidecar")
        return 0
    save_edge_list(g, args.output)
    print(f"wrote {args.output} (n={g.n}, m={g.m})")
    return 0


def cmd_sparsify(cfg: RunConfig) -> int:
    g = load_edge_list(cfg.inputs[0])
    out = _run_algorithm(g, cfg, cfg.p)
    sub = build_subgraph(g, out.H)
    save_edge_list(sub, cfg.output)
    stats = dict(out.stats)
    stats["input"] = cfg.inputs[0]
    stats["p"] = cfg.p
    blob = json.dumps(stats, sort_keys=True, indent=2)
    with open(cfg.output + ".stats.json", "w") as fh:
        fh.write(blob + "\n")
    print(blob)
    return 0


def build_subgraph(g: Graph, s: EdgeSet) -> Graph:
    from .graph import subgraph_of
    return subgraph_of(g, s)[0]


def cmd_estimate(cfg: RunConfig) -> int:
    g = load_edge_list(cfg.inputs[0])
    full = EdgeSet(g, range(g.m))
    est = estimate_expected_matching(full, cfg.p, cfg.trials, cfg.seed)
    report = {"input": cfg.inputs[0], "p": cfg.p, **est.to_json()}
    if len(cfg.inputs) > 1:
        h_graph = load_edge_list(cfg.inputs[1])
        h_ids = [g.edge_id(u, v) for u, v in h_graph.edges]
        ratio = estimate_ratio(g, EdgeSet(g, h_ids), cfg.p, cfg.trials, cfg.seed)
        report["ratio"] = ratio.to_json()
    _emit(report, cfg)
    return 0


def cmd_experiment(cfg: RunConfig) -> int:
    ps = cfg.p_values or (cfg.p,)
    rows = []
    for path in cfg.inputs:
        g = load_edge_list(path)
        for p in ps:
            out = _run_algorithm(g, cfg, p)
            row = {"instance": path, "n": g.n, "m": g.m, "p": p,
                   "branch": out.stats["branch"], "rounds": out.stats["rounds"],
                   "max_degree": out.stats["max_degree"]}
            if g.m == 0:
                row.update({"opt_mean": 0.0, "opt_stderr": 0.0, "alg_mean": 0.0,
                            "alg_stderr": 0.0, "ratio": "NA", "ratio_stderr": "NA",
                            "pass": "NA"})
            else:
                ratio = estimate_ratio(g, out.H, p, cfg.trials, cfg.seed)
                ok = ratio.ratio >= 0.5 - 3 * ratio.ratio_stderr
                row.update({"opt_mean": ratio.opt.mean, "opt_stderr": ratio.opt.stderr,
                            "alg_mean": ratio.alg.mean, "alg_stderr": ratio.alg.stderr,
                            "ratio": round(ratio.ratio, 6),
                            "ratio_stderr": round(ratio.ratio_stderr, 6),
                            "pass": "PASS" if ok else "FAIL"})
            rows.append(row)
    _emit_rows(rows, cfg)
    return 1 if any(r["pass"] == "FAIL" for r in rows) else 0


def cmd_verify(suite: str, quick: bool = False) -> int:
    report = run_suite(suite, quick=quick)
    for c in report["checks"]:
        status = "PASS" if c["passed"] else "FAIL"
        print(f"{status} {c['name']}: {c['detail']}")
    print(json.dumps({"suite": report["suite"], "passed": report["passed"]},
                     sort_keys=True))
    return 0 if report["passed"] else 1


def _emit(report: dict, cfg: RunConfig) -> None:
    text = json.dumps(report, sort_keys=True, indent=2)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _emit_rows(rows: list[dict], cfg: RunConfig) -> None:
    header = CSV_HEADER.split(",")
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow(r)
        text = buf.getvalue()
    else:
        text = json.dumps(rows, sort_keys=True, indent=2) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    sys.stdout.write(text)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="stochmatch",
                                 description="bounded-degree subgraphs preserving "
                                             "expected matching size under random "
                                             "edge failures")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance file")
    gensub = gen.add_subparsers(dest="family", required=True)
    g_er = gensub.add_parser("er")
    g_er.add_argument("--n", type=int, required=True)
    g_er.add_argument("--q", type=float, required=True)
    g_er.add_argument("--seed", type=int, default=0)
    g_er.add_argument("--output", required=True)
    g_k = gensub.add_parser("complete")
    g_k.add_argument("--n", type=int, required=True)
    g_k.add_argument("--output", required=True)
    g_kb = gensub.add_parser("complete-bipartite")
    g_kb.add_argument("--a", type=int, required=True)
    g_kb.add_argument("--b", type=int, required=True)
    g_kb.add_argument("--output", required=True)
    g_h = gensub.add_parser("hard")
    g_h.add_argument("--N", type=int, required=True)
    g_h.add_argument("--p", type=float, required=True)
    g_h.add_argument("--cstar", type=float, default=0.56)
    g_h.add_argument("--seed", type=int, default=0)
    g_h.add_argument("--output", required=True)

    def common(p, multi_input=False, multi_p=False):
        p.add_argument("--input", nargs="+" if multi_input else None, required=True)
        p.add_argument("--p", type=float, nargs="+" if multi_p else None,
                       required=True)
        p.add_argument("--p0", type=float, default=0.1)
        p.add_argument("--algorithm", choices=("small-p", "large-p", "auto"),
                       default="auto")
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--rounds-multiplier", type=float, default=2.0)
        p.add_argument("--output", default=None)
        p.add_argument("--format", choices=("csv", "json"), default="json")

    sp = sub.add_parser("sparsify", help="write the sparsified subgraph + stats")
    common(sp)
    sp.set_defaults(requires_output=True)

    est = sub.add_parser("estimate", help="estimate E[mu] (and the ratio when "
                                          "a subgraph file is also given)")
    common(est, multi_input=True)

    ex = sub.add_parser("experiment", help="per-instance ratio table (CSV/JSON)")
    common(ex, multi_input=True, multi_p=True)

    ver = sub.add_parser("verify", help="run a property suite")
    ver.add_argument("suite", choices=SUITE_NAMES + ("all",))
    ver.add_argument("--quick", action="store_true")
    return ap


def _to_config(args) -> RunConfig:
    inputs = args.input if isinstance(args.input, list) else [args.input]
    ps = args.p if isinstance(args.p, list) else [args.p]
    return RunConfig(command=args.command, inputs=tuple(inputs), p=float(ps[0]),
                     p_values=tuple(float(x) for x in ps), p0=args.p0,
                     algorithm=args.algorithm, trials=args.trials, seed=args.seed,
                     rounds_multiplier=args.rounds_multiplier, output=args.output,
                     fmt=args.format)


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args.suite, quick=args.quick)
        cfg = _to_config(args)
        if args.command == "sparsify":
            if not cfg.output:
                print("sparsify requires --output", file=sys.stderr)
                return 2
            return cmd_sparsify(cfg)
        if args.command == "estimate":
            return cmd_estimate(cfg)
        if args.command == "experiment":
            return cmd_experiment(cfg)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"hard check failed: {exc}", file=sys.stderr)
        return 1
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
