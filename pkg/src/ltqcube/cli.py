"""Command-line surface: deterministic, scriptable exports and reports.

Exit codes: 0 success, 1 verification failure, 2 domain refusal (bad
dimension, guarded oracle scope, bad flags), 3 malformed input document.
All human-facing node labels are fixed-width binary strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .broadcast import TrafficReport, simulate_ring_broadcast, simulate_split_broadcast
from .construction import edh_cycles, edh_paths
from .errors import LtqError
from .topology import MAX_DIM, NodeLabel, edges, make_label
from .verify import (
    ResidualAnalysis,
    enumerate_hamiltonian_cycles,
    exists_two_edge_disjoint_hc,
    residual_analysis,
    verify_pair,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_REFUSED = 2
EXIT_MALFORMED = 3

DOCUMENT_VERSION = 1


class DocumentError(ValueError):
    """A cycles-json document that cannot be parsed; maps to exit 3."""


def pair_document(pair) -> dict:
    return {
        "version": DOCUMENT_VERSION,
        "dim": pair.dim,
        "kind": pair.kind,
        "cycles": [[node.bits for node in member.nodes] for member in pair.members],
    }


def render_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_document(text: str) -> tuple[int, str, list[NodeLabel], list[NodeLabel]]:
    """Decode a cycles-json document into (dim, kind, first, second).

    Structural problems raise DocumentError; semantic problems (duplicate
    or misordered labels) are left for the checkers.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or not 2 <= dim <= MAX_DIM:
        raise DocumentError(f"dim must be an integer in [2, {MAX_DIM}], got {dim!r}")
    kind = doc.get("kind")
    if kind not in ("paths", "cycles"):
        raise DocumentError(f"kind must be 'paths' or 'cycles', got {kind!r}")
    arrays = doc.get("cycles")
    if not isinstance(arrays, list) or len(arrays) != 2:
        raise DocumentError("'cycles' must be an array of exactly two label arrays")
    members: list[list[NodeLabel]] = []
    for index, labels in enumerate(arrays):
        if not isinstance(labels, list) or not labels:
            raise DocumentError(f"member {index} must be a non-empty array of labels")
        nodes = []
        for label in labels:
            if not isinstance(label, str):
                raise DocumentError(f"member {index} holds a non-string label: {label!r}")
            try:
                nodes.append(make_label(dim, label))
            except LtqError as exc:
                raise DocumentError(f"member {index}: {exc}") from exc
        members.append(nodes)
    return dim, kind, members[0], members[1]


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _render_edgelist(edge_set) -> str:
    lines = sorted(f"{e.a.bits} {e.b.bits}" for e in edge_set)
    return "\n".join(lines) + "\n"


def _render_dot(dim: int, edge_set) -> str:
    lines = [f"graph ltq_{dim} {{"]
    lines.extend(f'  "{e.a.bits}" -- "{e.b.bits}";' for e in sorted(edge_set))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_report(payload: dict, text_lines: list[str], fmt: str) -> str:
    if fmt == "report-json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    return "\n".join(text_lines) + "\n"


def cmd_topology(args: argparse.Namespace) -> int:
    edge_set = edges(args.dim)
    if args.format == "dot":
        _emit(_render_dot(args.dim, edge_set), args.output)
    else:
        _emit(_render_edgelist(edge_set), args.output)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    pair = edh_cycles(args.dim) if args.kind == "cycles" else edh_paths(args.dim)
    _emit(render_document(pair_document(pair)), args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    dim, kind, first, second = parse_document(_read_input(args.input))
    report = verify_pair(dim, first, second, kind)
    _emit(_render_report(report.to_dict(), report.lines(), args.format), args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.mode == "enumerate":
        cycles = enumerate_hamiltonian_cycles(args.dim, args.limit)
        payload = {
            "dim": args.dim,
            "mode": "enumerate",
            "exhaustive": args.limit is None,
            "count": len(cycles),
            "cycles": [[n.bits for n in c.nodes] for c in cycles],
        }
        lines = [
            f"dim {args.dim}: {len(cycles)} Hamiltonian cycle(s)"
            + ("" if args.limit is None else f" (stopped at limit {args.limit})"),
        ]
        lines.extend(" -> ".join(n.bits for n in c.nodes) for c in cycles[:8])
        if len(cycles) > 8:
            lines.append(f"... {len(cycles) - 8} more")
    else:
        result = exists_two_edge_disjoint_hc(args.dim)
        payload = {
            "dim": args.dim,
            "mode": "pair-existence",
            "exists": result.exists,
            "certificates": list(result.certificates),
            "witness": None
            if result.witness is None
            else [[n.bits for n in m.nodes] for m in result.witness.members],
        }
        lines = [f"dim {args.dim}: two edge-disjoint Hamiltonian cycles exist: {result.exists}"]
        lines.extend(f"  - {c}" for c in result.certificates)
        if result.witness is not None:
            for member in result.witness.members:
                lines.append("  witness: " + " -> ".join(n.bits for n in member.nodes))
    _emit(_render_report(payload, lines, args.format), args.output)
    return EXIT_OK


def _traffic_payload(dim: int, mode: str, report: TrafficReport) -> tuple[dict, list[str]]:
    loads = sorted(set(report.per_edge_load.values()))
    payload = {
        "dim": dim,
        "mode": mode,
        "steps": report.steps,
        "edges_used": len(report.per_edge_load),
        "edges_total": dim << (dim - 1),
        "distinct_loads": loads,
        "max_concurrent_per_edge": report.max_concurrent_per_edge,
        "contention_events": report.contention_events,
        "completed": report.completed,
        "per_edge_load": {str(edge): load for edge, load in report.per_edge_load.items()},
    }
    lines = [
        f"dim {dim}, {mode} broadcast: {report.steps} steps",
        f"edges used: {len(report.per_edge_load)} of {dim << (dim - 1)}",
        "load per used edge: " + ", ".join(str(v) for v in loads),
        f"max concurrent per edge: {report.max_concurrent_per_edge}",
        f"contention events: {report.contention_events}",
        f"all messages delivered: {report.completed}",
    ]
    return payload, lines


def cmd_simulate(args: argparse.Namespace) -> int:
    pair = edh_cycles(args.dim)
    if args.mode == "single":
        report = simulate_ring_broadcast(pair.first)
    else:
        report = simulate_split_broadcast(pair)
    payload, lines = _traffic_payload(args.dim, args.mode, report)
    _emit(_render_report(payload, lines, args.format), args.output)
    return EXIT_OK


def _residual_payload(analysis: ResidualAnalysis) -> tuple[dict, list[str]]:
    payload = {
        "dim": analysis.dim,
        "unused_edges": len(analysis.unused_edges),
        "edges_total": analysis.dim << (analysis.dim - 1),
        "degree_histogram": {str(k): v for k, v in sorted(analysis.degree_histogram.items())},
        "unused_edge_list": sorted(str(e) for e in analysis.unused_edges),
        "search_budget": analysis.search_budget,
        "third_cycle": None
        if analysis.third_cycle_found is None
        else [n.bits for n in analysis.third_cycle_found.nodes],
    }
    lines = [
        f"dim {analysis.dim}: {len(analysis.unused_edges)} of "
        f"{analysis.dim << (analysis.dim - 1)} edges unused by the cycle pair",
        "residual degree histogram: "
        + ", ".join(f"{k}: {v}" for k, v in sorted(analysis.degree_histogram.items())),
    ]
    if analysis.search_budget is None:
        lines.append("third-cycle search: not requested")
    elif analysis.third_cycle_found is None:
        lines.append(
            f"third-cycle search: none found within budget {analysis.search_budget}"
            " (not a non-existence proof)"
        )
    else:
        lines.append(
            "third-cycle search: found "
            + " -> ".join(n.bits for n in analysis.third_cycle_found.nodes)
        )
    return payload, lines


def cmd_residual(args: argparse.Namespace) -> int:
    pair = edh_cycles(args.dim)
    analysis = residual_analysis(args.dim, pair, search_budget=args.budget)
    payload, lines = _residual_payload(analysis)
    _emit(_render_report(payload, lines, args.format), args.output)
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ltqcube",
        description="Locally twisted cubes: topology export, edge-disjoint Hamiltonian "
        "cycle construction, verification, oracles, and broadcast simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topology", help="export the cube's edges")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--format", choices=["edgelist", "dot"], default="edgelist")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_topology)

    p = sub.add_parser("construct", help="emit the two edge-disjoint Hamiltonian paths/cycles")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--kind", choices=["paths", "cycles"], default="cycles")
    p.add_argument("--format", choices=["cycles-json"], default="cycles-json")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("verify", help="check a cycles-json document with every checker")
    p.add_argument("input", nargs="?", default=None, help="path, or - for stdin (default)")
    p.add_argument("--format", choices=["report-text", "report-json"], default="report-text")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("oracle", help="exhaustive small-dimension searches")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", choices=["enumerate", "pair-existence"], required=True)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", choices=["report-text", "report-json"], default="report-text")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("simulate", help="all-to-all broadcast over the constructed rings")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", choices=["single", "split"], default="split")
    p.add_argument("--format", choices=["report-text", "report-json"], default="report-text")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_simulate)

    p = sub.add_parser("residual", help="edges unused by the pair; optional third-cycle hunt")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="node expansions for the search")
    p.add_argument("--format", choices=["report-text", "report-json"], default="report-text")
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_residual)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.handler(args)
    except DocumentError as exc:
        print(f"ltqcube: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"ltqcube: i/o error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except LtqError as exc:
        print(f"ltqcube: {exc}", file=sys.stderr)
        return EXIT_REFUSED


if __name__ == "__main__":
    sys.exit(main())
