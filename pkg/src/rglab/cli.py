"""
Command-line entry point: ``rglab gen | dfs | audit | hamilton | experiment``.

Exit codes: 0 on completion, 1 on a library error (bad input, capacity),
2 when ``experiment --assert`` sees a missed acceptance target.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path as FilePath
from typing import Any

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from rglab.dfs.dfs_engine import online_dfs, run_dfs, run_directed_dfs
from rglab.exceptions import InvalidInputError, RgLabError
from rglab.expander.audit import audit_properties
from rglab.expander.backbone import sparse_backbone
from rglab.expander.expander_models import BackboneConfig, CheckMode, ExpanderQuery
from rglab.expander.expansion import is_expander
from rglab.experiments.experiment_models import ExperimentConfig, ExperimentSummary
from rglab.experiments.registry import get_experiment, list_experiments
from rglab.experiments.runner import TrialRunner, write_csv, write_json
from rglab.graph.edge_list import format_edge_list, read_edge_list, write_edge_list
from rglab.graph.graph_model import DiGraph, Graph
from rglab.hamilton.booster_pipeline import augment_with_boosters
from rglab.hamilton.exact import exact_hamiltonian
from rglab.hamilton.ham_models import HamResult
from rglab.hamilton.rotation_search import rotation_extension_search
from rglab.random_models.bernoulli_stream import BernoulliStream
from rglab.random_models.edge_process import random_process
from rglab.random_models.generators import dnp, gnm, gnp
from rglab.random_models.seeding import derive_seed, make_rng
from rglab.settings import get_settings

logger = logging.getLogger("rglab")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_TARGET_MISSED = 2


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)],
        force=True,
    )


def _write_json(payload: Any, path: str) -> None:
    target = FilePath(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def _load_graph(path: str) -> Graph:
    g = read_edge_list(path)
    if isinstance(g, DiGraph):
        raise InvalidInputError(f"{path} holds a directed graph; this command needs an undirected one", field="input")
    return g


# --- gen ---------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace, console: Console) -> int:
    g: Graph | DiGraph
    if args.model == "gnp":
        g = gnp(args.n, _require(args.p, "p"), args.seed)
    elif args.model == "gnm":
        g = gnm(args.n, _require(args.m, "m"), args.seed)
    elif args.model == "dnp":
        g = dnp(args.n, _require(args.p, "p"), args.seed)
    else:
        g = random_process(args.n, args.seed).snapshot(_require(args.m, "m"))
    if args.out:
        write_edge_list(g, args.out)
        console.print(f"wrote {g!r} to {args.out}")
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _require(value: Any, name: str) -> Any:
    if value is None:
        raise InvalidInputError(f"--{name} is required for this model", field=name)
    return value


# --- dfs ---------------------------------------------------------------------


def cmd_dfs(args: argparse.Namespace, console: Console) -> int:
    if args.input:
        g = read_edge_list(args.input)
        order = None
        if args.order == "random":
            order = [int(v) for v in make_rng(args.order_seed).permutation(g.n)]
        trace = run_directed_dfs(g, order) if isinstance(g, DiGraph) else run_dfs(g, order)
    else:
        if args.order == "random":
            raise InvalidInputError("online DFS always uses the identity order", field="order", value=args.order)
        n = _require(args.n, "n")
        stream = BernoulliStream(_require(args.p, "p"), args.seed)
        _, trace = online_dfs(n, stream, directed=args.directed, materialize=n <= 5000)
    if args.trace:
        _write_json(trace.to_dict(), args.trace)
    if args.path_out and trace.max_u_path is not None:
        target = FilePath(args.path_out)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(" ".join(str(v) for v in trace.max_u_path) + "\n", encoding="utf-8")
    table = Table(title="DFS summary", show_header=False)
    table.add_row("vertices", str(trace.n))
    table.add_row("steps", str(trace.steps))
    table.add_row("components (epochs)", str(len(trace.epochs)))
    table.add_row("largest component", str(trace.largest_component()))
    table.add_row("longest U-path (vertices)", str(trace.max_u))
    table.add_row("balanced step", str(trace.balanced_step))
    table.add_row("queries", str(trace.query_count))
    console.print(table)
    return EXIT_OK


# --- audit -------------------------------------------------------------------


def cmd_audit(args: argparse.Namespace, console: Console) -> int:
    g = _load_graph(args.input)
    report = audit_properties(g, args.d0, seed=args.seed, samples=args.samples)
    payload: dict[str, Any] = report.model_dump(mode="json")
    table = Table(title=f"Edge-distribution audit (n={g.n}, d0={args.d0})")
    table.add_column("property")
    table.add_column("holds")
    table.add_column("mode")
    table.add_column("detail")
    for name, verdict in report.properties.items():
        mark = "[green]yes[/green]" if verdict.holds else "[red]no[/red]"
        table.add_row(name, mark, verdict.mode.value, escape(verdict.detail or ""))
    console.print(table)
    if args.k is not None:
        verdict = is_expander(
            g, ExpanderQuery(k=args.k, alpha=args.alpha), CheckMode(args.mode), seed=args.seed, d0=args.d0
        )
        payload["expansion"] = verdict.model_dump(mode="json")
        console.print(
            Panel(
                f"holds={verdict.holds} certainty={verdict.certainty.value} witness={verdict.witness}",
                title=f"({args.k}, {args.alpha})-expansion ({verdict.mode.value})",
            )
        )
    if args.out:
        _write_json(payload, args.out)
    return EXIT_OK


# --- hamilton ----------------------------------------------------------------


def cmd_hamilton(args: argparse.Namespace, console: Console) -> int:
    g = _load_graph(args.input)
    method = args.method
    if method == "auto":
        method = "exact" if g.n <= get_settings().exact_hamiltonian_cap else "rotation"
    result: HamResult
    if method == "exact":
        result = exact_hamiltonian(g)
    elif method == "rotation":
        result = rotation_extension_search(g, args.budget, seed=args.seed)
    else:
        backbone = sparse_backbone(g, BackboneConfig(d0=args.d0, seed=derive_seed(args.seed, "backbone")))
        result = augment_with_boosters(backbone, g, seed=derive_seed(args.seed, "boosters"), budget=args.budget)
    if args.out:
        _write_json(result.model_dump(mode="json"), args.out)
    style = "green" if result.is_hamiltonian else "yellow"
    console.print(
        Panel(
            f"status=[{style}]{result.status.value}[/{style}] method={result.method} "
            f"rotations={result.stats.rotations} boosters={len(result.added_edges)} "
            f"time={result.stats.elapsed_seconds:.3f}s",
            title=f"Hamiltonicity (n={g.n}, m={g.edge_count})",
        )
    )
    return EXIT_OK


# --- experiment --------------------------------------------------------------


def _parse_targets(items: Sequence[str]) -> dict[str, float]:
    targets: dict[str, float] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidInputError(f"targets are KEY=VALUE, got {item!r}", field="target", value=item)
        try:
            targets[key.strip()] = float(value)
        except ValueError as e:
            raise InvalidInputError(f"target value must be a number, got {item!r}", field="target", value=item) from e
    return targets


def render_summary(summary: ExperimentSummary, console: Console) -> None:
    metrics = Table(title=f"{summary.experiment}: {len(summary.records)} trials")
    metrics.add_column("metric")
    metrics.add_column("value", justify="right")
    for name, value in summary.metrics.items():
        metrics.add_row(escape(name), f"{value:.6g}")
    console.print(metrics)
    if summary.targets:
        targets = Table(title="acceptance targets")
        targets.add_column("target")
        targets.add_column("observed", justify="right")
        targets.add_column("threshold", justify="right")
        targets.add_column("met")
        for t in summary.targets:
            targets.add_row(
                escape(t.name), f"{t.observed:.6g}", f"{t.threshold:.6g}", "[green]yes[/green]" if t.met else "[red]no[/red]"
            )
        console.print(targets)


def cmd_experiment(args: argparse.Namespace, console: Console) -> int:
    if args.list:
        table = Table(title="registered experiments")
        table.add_column("name")
        table.add_column("description")
        for name, experiment in sorted(list_experiments().items()):
            table.add_row(name, escape(experiment.description))
        console.print(table)
        return EXIT_OK
    if not args.name:
        raise InvalidInputError("--name is required (or use --list)", field="name")
    experiment = get_experiment(args.name)
    fields: dict[str, Any] = {
        "name": experiment.name,
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "epsilon": args.epsilon,
        "directed": args.directed,
        "d0": args.d0,
        "window": args.window,
        "budget": args.budget,
        "targets": _parse_targets(args.target),
    }
    if args.offsets is not None:
        fields["offsets"] = args.offsets
    if args.models is not None:
        fields["models"] = args.models
    if args.samples is not None:
        fields["samples"] = args.samples
    config = ExperimentConfig(**fields)
    runner = TrialRunner(workers=args.workers, progress=args.progress or None, include_timing=args.timing)
    summary = runner.run(experiment, config)
    if args.csv:
        write_csv(summary, args.csv, include_timing=args.timing)
    if args.json:
        write_json(summary, args.json, include_timing=args.timing)
    render_summary(summary, console)
    if args.assert_targets and not summary.targets_met:
        missed = ", ".join(t.name for t in summary.missed())
        console.print(f"[red]acceptance targets missed:[/red] {missed}")
        return EXIT_TARGET_MISSED
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rglab", description="Random graph algorithms laboratory.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="sample a random graph and write it as an edge list")
    gen.add_argument("--model", choices=["gnp", "gnm", "dnp", "process"], default="gnp")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, help="edge probability (gnp, dnp)")
    gen.add_argument("--m", type=int, help="edge count (gnm) or snapshot index (process)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", help="edge-list path (stdout when omitted)")
    gen.set_defaults(handler=cmd_gen)

    dfs = sub.add_parser("dfs", help="run the S/U/T depth-first search")
    dfs.add_argument("--input", help="edge-list file; without it G(n,p) is exposed online")
    dfs.add_argument("--n", type=int)
    dfs.add_argument("--p", type=float)
    dfs.add_argument("--seed", type=int, default=0)
    dfs.add_argument("--directed", action="store_true", help="online mode: expose D(n,p)")
    dfs.add_argument("--order", choices=["identity", "random"], default="identity")
    dfs.add_argument("--order-seed", type=int, default=0)
    dfs.add_argument("--trace", help="write the JSON event log here")
    dfs.add_argument("--path-out", help="write the longest U-path here")
    dfs.set_defaults(handler=cmd_dfs)

    audit = sub.add_parser("audit", help="audit the edge-distribution properties of a graph")
    audit.add_argument("--input", required=True)
    audit.add_argument("--d0", type=int, default=4)
    audit.add_argument("--seed", type=int, default=0)
    audit.add_argument("--samples", type=int, default=200)
    audit.add_argument("--k", type=int, help="also check (k, alpha)-expansion")
    audit.add_argument("--alpha", type=float, default=2.0)
    audit.add_argument("--mode", choices=[m.value for m in CheckMode if m is not CheckMode.VACUOUS], default="sampled")
    audit.add_argument("--out", help="write the AuditReport JSON here")
    audit.set_defaults(handler=cmd_audit)

    ham = sub.add_parser("hamilton", help="search for a Hamilton cycle")
    ham.add_argument("--input", required=True)
    ham.add_argument("--method", choices=["auto", "exact", "rotation", "boosters"], default="auto")
    ham.add_argument("--seed", type=int, default=0)
    ham.add_argument("--budget", type=int)
    ham.add_argument("--d0", type=int, default=4, help="backbone threshold for --method boosters")
    ham.add_argument("--out", help="write the HamResult JSON here")
    ham.set_defaults(handler=cmd_hamilton)

    exp = sub.add_parser("experiment", help="run a registered Monte Carlo experiment")
    exp.add_argument("--name")
    exp.add_argument("--list", action="store_true", help="list registered experiments and exit")
    exp.add_argument("--n", type=int, default=1000)
    exp.add_argument("--epsilon", type=float)
    exp.add_argument("--trials", type=int, default=10)
    exp.add_argument("--seed", type=int, default=0)
    exp.add_argument("--workers", type=int, default=1)
    exp.add_argument("--offsets", type=float, nargs="+")
    exp.add_argument("--models", nargs="+", choices=["gnp", "gnm"])
    exp.add_argument("--directed", action="store_true")
    exp.add_argument("--d0", type=int, default=4)
    exp.add_argument("--window", type=int)
    exp.add_argument("--samples", type=int)
    exp.add_argument("--budget", type=int)
    exp.add_argument("--target", action="append", default=[], metavar="KEY=VALUE", help="override a target")
    exp.add_argument("--csv", help="write one row per trial here")
    exp.add_argument("--json", help="write the summary JSON here")
    exp.add_argument("--assert", dest="assert_targets", action="store_true", help="exit 2 on a missed target")
    exp.add_argument("--progress", action="store_true")
    exp.add_argument("--timing", action="store_true", help="emit wall_time columns")
    exp.set_defaults(handler=cmd_experiment)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run the chosen subcommand; returns the exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    console = Console()
    try:
        return int(args.handler(args, console))
    except RgLabError as e:
        logger.debug(f"{type(e).__name__}: {e.details}")
        console.print(f"[red]error:[/red] {escape(e.message)}")
        return EXIT_ERROR
    except ValidationError as e:
        console.print(f"[red]invalid configuration:[/red] {escape(str(e))}")
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
