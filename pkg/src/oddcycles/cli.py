"""Command-line interface.

Subcommands: gen, certify, count, verify-commonality, verify-turan,
regularize, oracle-suite, probe-bipartite.  Reports are JSON (plus a CSV
per-trial table when a campaign has trials); graphs travel as text edge
lists ("n m" header, one "u v" line per edge, '#' comments).

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or runtime error.
A config file (flat "key = value" lines mirroring the flags) can seed any
run; explicit flags override file values.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
import time
from dataclasses import dataclass

from . import campaigns
from .commonality import verify_commonality
from .counting import make_count_report
from .generators import (
    complete,
    complete_bipartite,
    cycle_graph,
    empty,
    paley,
    random_regular,
)
from .graphs import Graph, VertexSet, read_edge_list, write_edge_list
from .patterns import parse_pattern
from .regularize import RegularizationParams, regularize
from .spectral import certify_ndl, hypothesis_ratio


@dataclass
class ExperimentConfig:
    """Echoable description of one CLI run; round-trips through its file form."""

    command: str = ""
    host: str | None = None
    sub: str | None = None
    subset: str | None = None
    pattern: str | None = None
    k: int = 1
    alpha: float | None = None
    delta: float | None = None
    epsilon: float | None = None
    rho: float | None = None
    eta: float | None = None
    trials: int = 0
    seed: int = 0
    out: str | None = None

    def to_file(self, path) -> None:
        with open(path, "w") as fh:
            for f in dataclasses.fields(self):
                val = getattr(self, f.name)
                if val is not None:
                    fh.write(f"{f.name} = {val}\n")

    @classmethod
    def from_file(cls, path) -> "ExperimentConfig":
        raw: dict[str, str] = {}
        with open(path) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                key, _, val = line.partition("=")
                raw[key.strip()] = val.strip()
        kwargs = {}
        for f in dataclasses.fields(cls):
            if f.name not in raw:
                continue
            text = raw[f.name]
            if f.type in ("int", int):
                kwargs[f.name] = int(text)
            elif f.type in ("float | None", "float"):
                kwargs[f.name] = float(text)
            else:
                kwargs[f.name] = text
        return cls(**kwargs)


@dataclass
class Report:
    command: str
    config: dict
    records: list[dict]
    summary: dict
    aggregate_pass: bool
    runtime_s: float

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def write(self, out: str) -> None:
        path = out if out.endswith(".json") else out + ".json"
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2, sort_keys=True, default=str)
            fh.write("\n")
        if self.records:
            csv_path = path[: -len(".json")] + ".csv"
            keys = sorted({k for r in self.records for k in r})
            with open(csv_path, "w", newline="") as fh:
                writer = csv.DictWriter(fh, fieldnames=keys)
                writer.writeheader()
                writer.writerows(self.records)


def _load_subset(path: str, host_n: int) -> VertexSet:
    members = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                members.extend(int(tok) for tok in line.split())
    return VertexSet(host_n, tuple(members))


def _generate(family: list[str], seed: int) -> Graph:
    kind, args = family[0], [int(a) for a in family[1:]]
    if kind == "paley":
        return paley(args[0])
    if kind == "regular":
        return random_regular(args[0], args[1], seed)
    if kind == "complete":
        return complete(args[0])
    if kind == "cycle":
        return cycle_graph(args[0])
    if kind == "complete_bipartite":
        return complete_bipartite(args[0], args[1])
    if kind == "empty":
        return empty(args[0])
    raise ValueError(f"unknown generator kind {kind!r}")


def _run_gen(cfg: ExperimentConfig, family: list[str]) -> Report:
    start = time.monotonic()
    G = _generate(family, cfg.seed)
    if cfg.out:
        write_edge_list(G, cfg.out)
    else:
        from .graphs import format_edge_list

        sys.stdout.write(format_edge_list(G))
    summary = {"generator": " ".join(family), "n": G.n, "m": G.m}
    return Report("gen", dataclasses.asdict(cfg), [], summary, True,
                  time.monotonic() - start)


def _run_certify(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    G = read_edge_list(cfg.host)
    cert = certify_ndl(G)
    ratios = {
        str(k): (hypothesis_ratio(cert, k) if cert.d > 0 else None)
        for k in range(1, 5)
    }
    summary = {"n": cert.n, "d": cert.d, "lambda": cert.lam, "p": cert.p,
               "hypothesis_ratio": ratios}
    print(json.dumps(summary, indent=2, sort_keys=True))
    return Report("certify", dataclasses.asdict(cfg), [], summary, True,
                  time.monotonic() - start)


def _run_count(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    G = read_edge_list(cfg.host)
    report = make_count_report(cfg.host, G, parse_pattern(cfg.pattern))
    summary = dataclasses.asdict(report)
    print(json.dumps(summary, indent=2, sort_keys=True))
    return Report("count", dataclasses.asdict(cfg), [], summary, True,
                  time.monotonic() - start)


def _run_commonality(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    host = read_edge_list(cfg.host)
    cert = certify_ndl(host)
    eps = cfg.epsilon if cfg.epsilon is not None else 0.5
    if cfg.trials > 0:
        records, summary, ok = campaigns.random_subgraph_trials(
            host, cert, cfg.k, cfg.trials, cfg.seed, epsilon=eps
        )
    else:
        if not cfg.sub:
            raise ValueError("verify-commonality needs --sub or --trials")
        sub = read_edge_list(cfg.sub)
        X = _load_subset(cfg.subset, host.n) if cfg.subset else VertexSet.full(host.n)
        rep = verify_commonality(host, cert, X, sub, cfg.k)
        records = [dataclasses.asdict(rep)]
        claim_made = rep.hypothesis_ratio < 1 and not rep.vacuous
        summary = {"holds": rep.holds, "vacuous": rep.vacuous, "bound": rep.bound,
                   "claim_made": claim_made}
        ok = rep.holds or not claim_made
    return Report("verify-commonality", dataclasses.asdict(cfg), records, summary,
                  ok, time.monotonic() - start)


def _run_turan(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    host = read_edge_list(cfg.host)
    delta = cfg.delta if cfg.delta is not None else 0.05
    trials = cfg.trials or 100
    records, summary, ok = campaigns.turan_trials(host, cfg.k, delta, trials, cfg.seed)
    return Report("verify-turan", dataclasses.asdict(cfg), records, summary, ok,
                  time.monotonic() - start)


def _run_probe(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    host = read_edge_list(cfg.host)
    cert = certify_ndl(host)
    trials = cfg.trials or 50
    records, summary, ok = campaigns.bipartite_probe(host, cert, cfg.k, trials, cfg.seed)
    return Report("probe-bipartite", dataclasses.asdict(cfg), records, summary, ok,
                  time.monotonic() - start)


def _run_regularize(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    host = read_edge_list(cfg.host)
    sub = read_edge_list(cfg.sub)
    params = RegularizationParams(
        alpha=cfg.alpha if cfg.alpha is not None else 0.5,
        epsilon=cfg.epsilon if cfg.epsilon is not None else 0.25,
        rho=cfg.rho if cfg.rho is not None else 1.0,
        eta=cfg.eta if cfg.eta is not None else 1e-3,
    )
    result = regularize(host, sub, params)
    record = {
        "X": list(result.X.members),
        "trace": result.trace,
        "checks": result.checks,
        "claim_regime": result.claim_regime,
        "eta_constraints": result.eta_constraints,
    }
    ok = bool(
        result.checks["size_ok"]
        and result.checks["min_G_degree_ok"]
        and result.checks["gamma_degree_ok"]
    )
    summary = {"x_size": len(result.X), "checks": result.checks}
    print(json.dumps(record, indent=2, sort_keys=True, default=str))
    return Report("regularize", dataclasses.asdict(cfg), [record], summary, ok,
                  time.monotonic() - start)


def _run_oracle_suite(cfg: ExperimentConfig) -> Report:
    start = time.monotonic()
    trials = cfg.trials or 60
    rows, summary, ok = campaigns.oracle_suite(cfg.seed, trials)
    width = max(len(r["check"]) for r in rows)
    for r in rows:
        mark = "PASS" if r["pass"] else "FAIL"
        print(f"{r['check']:<{width}}  {mark}  {r['detail']}")
    return Report("oracle-suite", dataclasses.asdict(cfg), rows, summary, ok,
                  time.monotonic() - start)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oddcycles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key = value file seeding these flags")
        p.add_argument("--k", type=int, default=None)
        p.add_argument("--alpha", type=float, default=None)
        p.add_argument("--delta", type=float, default=None)
        p.add_argument("--epsilon", type=float, default=None)
        p.add_argument("--rho", type=float, default=None)
        p.add_argument("--eta", type=float, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None)

    g = sub.add_parser("gen", help="emit a generated graph as an edge list")
    g.add_argument("family", nargs="+",
                   help="paley Q | regular N D | complete N | cycle N | "
                        "complete_bipartite A B | empty N")
    common(g)

    for name, needs_sub in [
        ("certify", False), ("count", False), ("verify-commonality", False),
        ("verify-turan", False), ("probe-bipartite", False), ("regularize", True),
    ]:
        p = sub.add_parser(name)
        p.add_argument("--host", required=False)
        p.add_argument("--sub", required=needs_sub)
        if name == "verify-commonality":
            p.add_argument("--subset", default=None)
        if name == "count":
            p.add_argument("--pattern", required=True,
                           help="c3 | c5 | p4 | fig8:q,r")
        common(p)

    p = sub.add_parser("oracle-suite", help="run all identity/oracle cross-checks")
    common(p)
    return parser


def _merge_config(args: argparse.Namespace) -> ExperimentConfig:
    base = ExperimentConfig()
    if getattr(args, "config", None):
        base = ExperimentConfig.from_file(args.config)
    cfg = ExperimentConfig(**dataclasses.asdict(base))
    cfg.command = args.command
    for name in ("host", "sub", "subset", "pattern", "k", "alpha", "delta",
                 "epsilon", "rho", "eta", "trials", "seed", "out"):
        val = getattr(args, name, None)
        if val is not None:
            setattr(cfg, name, val)
    if cfg.k is None:
        cfg.k = 1
    if cfg.trials is None:
        cfg.trials = 0
    if cfg.seed is None:
        cfg.seed = 0
    return cfg


_HANDLERS = {
    "certify": _run_certify,
    "count": _run_count,
    "verify-commonality": _run_commonality,
    "verify-turan": _run_turan,
    "probe-bipartite": _run_probe,
    "regularize": _run_regularize,
    "oracle-suite": _run_oracle_suite,
}


def run(cfg: ExperimentConfig, family: list[str] | None = None) -> Report:
    """Execute one configured campaign and return its report."""
    if cfg.command == "gen":
        return _run_gen(cfg, family or [])
    handler = _HANDLERS.get(cfg.command)
    if handler is None:
        raise ValueError(f"unknown command {cfg.command!r}")
    return handler(cfg)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _merge_config(args)
    try:
        report = run(cfg, getattr(args, "family", None))
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cfg.out and cfg.command != "gen":
        report.write(cfg.out)
    if cfg.command not in ("gen", "certify", "count", "regularize"):
        print(json.dumps(report.summary, indent=2, sort_keys=True, default=str))
        print(f"aggregate: {'pass' if report.aggregate_pass else 'fail'}")
    return 0 if report.aggregate_pass else 1


if __name__ == "__main__":
    sys.exit(main())
