"""Command-line interface: ``rrw {classify,region,report,thresholds,verify}``.

Exit codes: 0 ok, 2 input error, 3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import bounds_g4 as g4
from . import bounds_g7 as g7
from .channel import ChannelParams, ChannelParamsError, validate_params
from .graphs import GraphError, SideInfoGraph, decompose, member_graph
from .regions import DEFAULT_TOL, containment_report, slice_region

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN, EXIT_VERIFY = 0, 2, 3, 4
DEFAULT_CHANNEL = {"P": 10.0, "N": [1.0, 2.0, 4.0]}


class InputError(Exception):
    pass


class DomainFailure(Exception):
    pass


@dataclass
class RunConfig:
    channel: ChannelParams
    graph: SideInfoGraph
    group: int
    k: int
    seed: int
    grid: int
    tol: float


def _load_config(args) -> RunConfig:
    raw = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(raw, dict):
            raise InputError("config must be a JSON object")
    chan = {"P": raw.get("P", DEFAULT_CHANNEL["P"]), "N": raw.get("N", DEFAULT_CHANNEL["N"])}
    if args.P is not None:
        chan["P"] = args.P
    if args.N is not None:
        try:
            chan["N"] = [float(x) for x in args.N.split(",")]
        except ValueError:
            raise InputError(f"--N expects comma-separated numbers, got {args.N!r}") from None
    try:
        channel = validate_params(chan)
    except ChannelParamsError as exc:
        raise InputError(str(exc)) from None

    flag_graph = args.arcs is not None
    flag_member = args.group is not None or args.member is not None
    if flag_graph and flag_member:
        raise InputError("give either --arcs or --group/--member, not both")
    try:
        if flag_member:
            if args.group is None or args.member is None:
                raise InputError("--group and --member must be given together")
            graph = member_graph(args.group, args.member)
        elif flag_graph:
            graph = SideInfoGraph.parse(args.arcs)
        elif "graph" in raw and ("group" in raw or "k" in raw):
            raise InputError("config must give either 'graph' or 'group'/'k', not both")
        elif "graph" in raw:
            graph = SideInfoGraph.from_json(raw["graph"])
        elif "group" in raw:
            graph = member_graph(int(raw["group"]), int(raw["k"]))
        else:
            graph = member_graph(4, 1)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    dec = decompose(graph)
    tol = args.tol if args.tol is not None else raw.get("tol", DEFAULT_TOL)
    grid = args.grid if args.grid is not None else raw.get("grid", 32)
    if not (tol > 0) or grid < 2:
        raise InputError("tolerance must be > 0 and grid >= 2")
    seed = args.seed if args.seed is not None else raw.get("seed", 0)
    return RunConfig(channel, graph, dec.leader_index, dec.subgraph_index, int(seed), int(grid), float(tol))


def _member_json(cfg: RunConfig) -> dict:
    return {"group": cfg.group, "k": cfg.k, "arcs": cfg.graph.to_json()["arcs"]}


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------- commands


def cmd_classify(args) -> int:
    try:
        graph = SideInfoGraph.parse(args.arcs) if args.arcs is not None else _load_config(args).graph
    except GraphError as exc:
        raise InputError(str(exc)) from None
    _emit(decompose(graph).to_json())
    return EXIT_OK


def member_regions(cfg: RunConfig) -> dict:
    """Named regions plotted for the configured member."""
    ch = cfg.channel
    if cfg.group == 4:
        out = {
            "inner1": g4.inner1_g4(cfg.k, ch),
            "inner2": g4.inner2_g4(cfg.k, ch),
            "hull": g4.proposed_inner_g4(cfg.k, ch),
            "outer1": g4.outer1_g4(ch),
        }
        if cfg.k == 1:
            out["outer2"] = g4.outer2_g4_g21(ch)
        out["proposed_outer"] = g4.proposed_outer_g4(cfg.k, ch).region
    elif cfg.group == 7:
        out = {
            "inner": g7.inner_g7(cfg.k, ch),
            "outer1": g7.outer1_g7(ch),
            "proposed_outer": g7.proposed_outer_g7(cfg.k, ch),
        }
        if not g7.Group7Member.of(cfg.k).solved:
            out["best_inner"] = g7.best_inner_g7(cfg.k, ch)
    else:
        raise DomainFailure(f"bounds are only implemented for groups 4 and 7 (graph is in group {cfg.group})")
    out["best_outer"] = g7.best_outer(cfg.graph, ch)
    return out


def cmd_region(args) -> int:
    cfg = _load_config(args)
    regions = member_regions(cfg)
    axis, value = args.fixed_axis, args.value
    limit = regions["best_outer"].axis_extent(axis)
    if not (0 <= value <= limit + 1e-9):
        raise DomainFailure(f"slice value {value} outside [0, {limit:.12g}] on axis R{axis}")
    slices = {}
    for name, reg in regions.items():
        s = slice_region(reg, axis, value, args.points)
        # a section that collapsed to the origin is reported as empty
        if len(s.x) and s.x[-1] <= 1e-9 and s.y.max(initial=0.0) <= 1e-9:
            s = type(s)(s.fixed_axis, s.fixed_value, s.x_axis, s.y_axis, s.x[:0], s.y[:0])
        slices[name] = s
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    files = {}
    for name, s in slices.items():
        fname = f"{name}.csv"
        (out / fname).write_text(s.to_csv())
        files[name] = fname
    manifest = {
        "member": _member_json(cfg),
        "channel": cfg.channel.to_dict(),
        "fixed_axis": axis,
        "fixed_value": value,
        "points": args.points,
        "files": files,
        "seed": cfg.seed,
    }
    _emit(manifest, out / "manifest.json")
    _emit(manifest)
    return EXIT_OK


def cmd_report(args) -> int:
    cfg = _load_config(args)
    ch, grid, tol = cfg.channel, cfg.grid, cfg.tol
    reports = {}
    if cfg.group == 4:
        outer = g4.proposed_outer_g4(cfg.k, ch)
        hull = g4.proposed_inner_g4(cfg.k, ch)
        reports["inner_vs_outer"] = containment_report(hull, outer.region, grid, tol)
        reports["outer_vs_best_outer"] = containment_report(outer.region, g7.best_outer(cfg.graph, ch), grid, tol)
        extra = {"outer1_only": outer.outer1_only}
        headline = reports["inner_vs_outer"].verdict
    elif cfg.group == 7:
        if g7.Group7Member.of(cfg.k).solved:
            cert = g7.capacity_g7(cfg.k, ch, grid, tol)
            reports["capacity"] = cert.report
            headline = cert.report.verdict
        else:
            comp = g7.comparison_report_g7(cfg.k, ch, grid, tol)
            reports["best_inner_vs_inner"] = comp.inner
            reports["outer_vs_best_outer"] = comp.outer
            headline = comp.inner.verdict
        extra = {}
    else:
        raise DomainFailure(f"bounds are only implemented for groups 4 and 7 (graph is in group {cfg.group})")
    _emit({
        "member": _member_json(cfg),
        "channel": ch.to_dict(),
        "verdict": headline,
        "reports": {k: v.to_json() for k, v in reports.items()},
        "seed": cfg.seed,
        **extra,
    })
    return EXIT_OK


def cmd_thresholds(args) -> int:
    cfg = _load_config(args)
    if (cfg.group, cfg.k) != (4, 1):
        raise DomainFailure("thresholds are only characterised for G14 u G21")
    try:
        pair = g4.thresholds_g4_g21(args.r1, cfg.channel)
    except ValueError as exc:
        raise DomainFailure(str(exc)) from None
    _emit({"r1": args.r1, "channel": cfg.channel.to_dict(), **pair.to_json(), "seed": cfg.seed})
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    cfg = _load_config(args)
    checks = run_checks(cfg.channel, cfg.seed, probes=args.probes)
    passed = all(c["passed"] for c in checks)
    _emit({"seed": cfg.seed, "channel": cfg.channel.to_dict(), "passed": passed, "checks": checks})
    return EXIT_OK if passed else EXIT_VERIFY


# ------------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config: {\"P\": 10, \"N\": [1, 2, 4], \"graph\": {\"arcs\": [[3, 1]]}}")
    common.add_argument("--P", type=float, help="transmit power (overrides config)")
    common.add_argument("--N", help="noise variances N1,N2,N3 (overrides config)")
    common.add_argument("--arcs", help="side-information arcs, e.g. '3-1,2-3'")
    common.add_argument("--group", type=int, help="group index (4 or 7)")
    common.add_argument("--member", type=int, help="subgraph index k")
    common.add_argument("--seed", type=int)
    common.add_argument("--grid", type=int, help="direction grid size per angle (default 32)")
    common.add_argument("--tol", type=float, help="verdict tolerance in bits (default 1e-3)")

    parser = argparse.ArgumentParser(prog="rrw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="decompose a graph into leader and subgraph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("region", parents=[common], help="write boundary slices as CSV")
    p.add_argument("--fixed-axis", type=int, default=1, choices=(1, 2, 3))
    p.add_argument("--value", type=float, default=0.0)
    p.add_argument("--points", type=int, default=101)
    p.add_argument("--out", default="slices")
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("report", parents=[common], help="containment / coincidence certificates")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("thresholds", parents=[common], help="R3 tightness thresholds for G14 u G21")
    p.add_argument("--r1", type=float, required=True)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("verify", parents=[common], help="cross-check the engine against brute-force oracles")
    p.add_argument("--probes", type=int, default=2000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DomainFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
