"""JSON and DOT serialisation.

Graph files carry either an explicit edge list or a unit-disk instance
(points plus radius, edges derived); the two are mutually exclusive.  All
writers emit stable key order and two-space indentation, so re-serialising
identical values is byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Mapping

from .errors import GraphInputError
from .geometry import UdgInstance
from .graph import Graph, from_edge_list
from .pipeline import PlutusConfig, PlutusResult, Role
from .verify import OracleResult, VerificationReport

SCHEMA_VERSION = 1


def dumps(payload: Mapping[str, Any]) -> str:
    return json.dumps(payload, indent=2) + "\n"


def write_json(path: str | Path, payload: Mapping[str, Any]) -> None:
    Path(path).write_text(dumps(payload), encoding="utf-8")


def read_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON in {path}: {exc}") from exc


def graph_to_dict(g: Graph) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "n": g.node_count,
        "edges": [[u, v] for u, v in g.edges()],
    }


def udg_to_dict(instance: UdgInstance) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "n": instance.n,
        "points": [[x, y] for x, y in instance.points],
        "radius": instance.radius,
    }


def graph_from_dict(payload: Any) -> tuple[Graph, UdgInstance | None]:
    """Parse a graph file: returns the graph and, for unit-disk files, the
    underlying instance."""
    if not isinstance(payload, dict):
        raise GraphInputError("graph JSON must be an object")
    if "points" in payload or "radius" in payload:
        if "edges" in payload:
            raise GraphInputError("edges must be absent when points are given")
        if "points" not in payload or "radius" not in payload:
            raise GraphInputError("points and radius must be given together")
        points = payload["points"]
        if not isinstance(points, list):
            raise GraphInputError("points must be a list of [x, y] pairs")
        try:
            coords = tuple((float(p[0]), float(p[1])) for p in points)
        except (TypeError, ValueError, IndexError) as exc:
            raise GraphInputError(f"malformed point list: {exc}") from exc
        if "n" in payload and payload["n"] != len(coords):
            raise GraphInputError(
                f"n={payload['n']} does not match {len(coords)} points"
            )
        instance = UdgInstance(coords, float(payload["radius"]))
        return instance.graph(), instance
    if "n" not in payload or "edges" not in payload:
        raise GraphInputError("graph JSON needs either n+edges or points+radius")
    edges = payload["edges"]
    if not isinstance(edges, list):
        raise GraphInputError("edges must be a list of [u, v] pairs")
    try:
        pairs = [(int(e[0]), int(e[1])) for e in edges]
    except (TypeError, ValueError, IndexError) as exc:
        raise GraphInputError(f"malformed edge list: {exc}") from exc
    return from_edge_list(int(payload["n"]), pairs), None


def load_graph(path: str | Path) -> tuple[Graph, UdgInstance | None]:
    return graph_from_dict(read_json(path))


def result_to_dict(result: PlutusResult, cfg: PlutusConfig) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "D": sorted(result.dominating_set),
        "k": cfg.k,
        "m": cfg.m,
        "phases": [
            {"name": phase.name, "size": phase.size, "added": list(phase.added)}
            for phase in result.phase_trace
        ],
        "roles": {str(v): role.value for v, role in enumerate(result.roles)},
    }


def result_from_dict(payload: Any) -> tuple[frozenset[int], int, int]:
    """Extract (D, k, m) from a result file; enough to re-verify it."""
    if not isinstance(payload, dict) or "D" not in payload:
        raise GraphInputError("result JSON must be an object with a D field")
    try:
        backbone = frozenset(int(v) for v in payload["D"])
        k = int(payload.get("k", 1))
        m = int(payload.get("m", 1))
    except (TypeError, ValueError) as exc:
        raise GraphInputError(f"malformed result JSON: {exc}") from exc
    return backbone, k, m


def _jsonify_witness(witness: tuple | None) -> list | None:
    if witness is None:
        return None
    out: list[Any] = []
    for item in witness:
        if isinstance(item, (tuple, frozenset, set, list)):
            out.append(sorted(item))
        else:
            out.append(item)
    return out


def report_to_dict(
    report: VerificationReport, stretch: tuple[float, Any] | None = None
) -> dict[str, Any]:
    payload: dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "overall": report.overall,
        "checks": [
            {
                "name": check.name,
                "pass": check.passed,
                "witness": _jsonify_witness(check.witness),
            }
            for check in report.checks
        ],
    }
    if stretch is not None:
        value, worst = stretch
        payload["stretch"] = {
            "max": value,
            "pair": list(worst.pair) if worst is not None else None,
        }
    return payload


def oracle_to_dict(result: OracleResult, k: int, m: int) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "k": k,
        "m": m,
        "feasible": result.feasible,
        "optimum_size": result.optimum_size,
        "witness": sorted(result.optimum_witness) if result.feasible else None,
        "sets_examined": result.sets_examined,
    }


def manifest_to_dict(
    command: str,
    seed: int | None,
    inputs: Iterable[str],
    outputs: Iterable[str],
    config: Mapping[str, Any] | None = None,
) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "seed": seed,
        "inputs": list(inputs),
        "outputs": list(outputs),
        "config": dict(config) if config else None,
    }


_DOT_FILL = {
    Role.DOMINATOR: "black",
    Role.DOMINATION_RELUCTANT: "gray",
    Role.DOMINATION_PRONE: "white",
}


def to_dot(g: Graph, roles: tuple[Role, ...], dominating_set: Iterable[int]) -> str:
    """Graphviz rendering: nodes filled by role, the backbone grouped as a
    subgraph.  Write-only format."""
    backbone = sorted(set(dominating_set))
    lines = ["graph backbone {", "  node [style=filled];"]
    lines.append("  subgraph cluster_dominating_set {")
    lines.append('    label="D";')
    for v in backbone:
        lines.append(f'    {v} [fillcolor=black, fontcolor=white];')
    lines.append("  }")
    member = set(backbone)
    for v in range(g.node_count):
        if v in member:
            continue
        lines.append(f"  {v} [fillcolor={_DOT_FILL[roles[v]]}];")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
