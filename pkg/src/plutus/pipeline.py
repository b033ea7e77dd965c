"""The Plutus greedy pipeline: five phases that grow a dominating set into
an m-connected k-dominating backbone.

    isolation       greedy maximal independent set via role propagation
    domination      connect independent dominators into a CDS
    synergy         stack further independent layers until k-dominance
    diversification augment leaf blocks until the backbone is 2-connected
    sustainability  repair bad points until the backbone is 3-connected

Phases only ever add vertices; a dominator never loses its role.  All
tie-breaks (degree picks, block picks, path choices) go to the lowest node
id, so a run is a pure deterministic function of (graph, config).  The
pipeline is single-threaded; callers wanting parallelism run independent
instances concurrently.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .errors import (
    DisconnectedInputError,
    EmptyGraphError,
    GraphInputError,
    GraphNotMConnectedError,
    Infeasible2ConnectivityError,
    Infeasible3ConnectivityError,
    InfeasibleKDominanceError,
    IterationCapExceededError,
)
from .graph import (
    Graph,
    _lex_shortest_path,
    _strictly_biconnected,
    block_cut_tree,
    connected_components,
    is_connected,
    is_m_connected,
)


class Role(Enum):
    """Pipeline state of a node.  Transitions only move toward dominance:
    prone -> reluctant, prone -> dominator, reluctant -> dominator."""

    DOMINATOR = "dominator"
    DOMINATION_RELUCTANT = "reluctant"
    DOMINATION_PRONE = "prone"


@dataclass(frozen=True)
class PlutusConfig:
    """Targets for a pipeline run: k-dominance multiplicity, connectivity
    level m (at most 3), the augmentation-loop safety cap (None means
    10 * node count) and the synergy feasibility mode."""

    k: int = 1
    m: int = 1
    max_augmentation_iterations: int | None = None
    strict_k_dominance: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.k, int) or self.k < 1:
            raise GraphInputError(f"k must be a positive integer, got {self.k!r}")
        if self.m not in (1, 2, 3):
            raise GraphInputError(f"m must be 1, 2 or 3, got {self.m!r}")
        cap = self.max_augmentation_iterations
        if cap is not None and (not isinstance(cap, int) or cap < 1):
            raise GraphInputError(f"iteration cap must be positive, got {cap!r}")


@dataclass(frozen=True)
class PhaseTrace:
    name: str
    size: int
    added: tuple[int, ...]


@dataclass(frozen=True)
class PlutusResult:
    """Backbone plus provenance: the per-phase growth trace and the final
    role of every node.  ``dominating_set`` equals the dominator roles."""

    dominating_set: frozenset[int]
    phase_trace: tuple[PhaseTrace, ...]
    roles: tuple[Role, ...]


def _greedy_mis_component(
    comp: Sequence[int], adj: Mapping[int, Sequence[int]], roles: dict[int, Role]
) -> list[int]:
    """Greedy independent-set rounds on one connected component.

    All component nodes must currently be prone.  The maximum-degree node
    (tie: lowest id) becomes a dominator and its neighbours turn reluctant;
    then, while prone nodes remain, the prone node with the most reluctant
    neighbours (tie: lowest id) is promoted the same way.
    """
    prone = set(comp)
    reluctant_neighbors = {v: 0 for v in comp}
    dominators: list[int] = []

    def promote(v: int) -> None:
        roles[v] = Role.DOMINATOR
        prone.discard(v)
        dominators.append(v)
        for w in adj[v]:
            if roles[w] is Role.DOMINATION_PRONE:
                roles[w] = Role.DOMINATION_RELUCTANT
                prone.discard(w)
                for x in adj[w]:
                    reluctant_neighbors[x] += 1

    first = None
    best_degree = -1
    for v in comp:
        if len(adj[v]) > best_degree:
            best_degree = len(adj[v])
            first = v
    promote(first)
    while prone:
        pick = None
        best = -1
        for v in sorted(prone):
            if reluctant_neighbors[v] > best:
                best = reluctant_neighbors[v]
                pick = v
        promote(pick)
    return dominators


def isolation(g: Graph) -> tuple[frozenset[int], tuple[Role, ...]]:
    """Phase 1: carve a maximal independent dominator set out of a
    connected graph.

    Every node starts prone; greedy rounds (see
    :func:`_greedy_mis_component`) run until no prone node remains.  The
    returned set is independent (a prone node is never adjacent to a
    dominator) and maximal (every non-member ends up reluctant, i.e.
    adjacent to a member).
    """
    if g.node_count == 0:
        raise EmptyGraphError("isolation needs at least one node")
    if not is_connected(g):
        raise DisconnectedInputError("isolation requires a connected graph")
    nodes = list(range(g.node_count))
    roles = {v: Role.DOMINATION_PRONE for v in nodes}
    adj = {v: g.adjacency[v] for v in nodes}
    mis = _greedy_mis_component(nodes, adj, roles)
    return frozenset(mis), tuple(roles[v] for v in nodes)


class _UnionFind:
    def __init__(self, items: Iterable[int]) -> None:
        self.parent = {v: v for v in items}

    def add(self, v: int) -> None:
        self.parent.setdefault(v, v)

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _mis_pairs_within(g: Graph, mis: Sequence[int], limit: int) -> list[tuple[int, int, int]]:
    """(distance, u, v) for independent-set pairs with hop distance <= limit,
    found by a depth-limited BFS from each member."""
    members = set(mis)
    pairs: list[tuple[int, int, int]] = []
    for u in sorted(mis):
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            d = dist[x]
            if d == limit:
                continue
            for y in g.adjacency[x]:
                if y not in dist:
                    dist[y] = d + 1
                    queue.append(y)
                    if y in members and y > u:
                        pairs.append((d + 1, u, y))
    pairs.sort()
    return pairs


def domination(g: Graph, mis: Iterable[int]) -> frozenset[int]:
    """Phase 2: connect the independent dominators into a connected
    dominating set.

    Dominator pairs within three hops are visited in ascending
    (distance, smaller id, larger id) order; a pair whose endpoints
    already share a component of the growing backbone is skipped, and
    otherwise the internal vertices of the deterministic shortest path
    between them are promoted.
    """
    members = sorted(set(mis))
    if not members:
        raise GraphInputError("mis must be non-empty")
    independent, witness = _check_maximal_independent(g, set(members))
    if not independent:
        raise GraphInputError(f"input is not a maximal independent set: {witness}")

    dominating = set(members)
    components = _UnionFind(members)

    def promote(w: int) -> None:
        dominating.add(w)
        components.add(w)
        for x in g.adjacency[w]:
            if x in dominating:
                components.union(w, x)

    for _, u, v in _mis_pairs_within(g, members, 3):
        if components.find(u) == components.find(v):
            continue
        path = _lex_shortest_path(g, u, v, lambda x: True)
        for w in path[1:-1]:
            if w not in dominating:
                promote(w)
    roots = {components.find(v) for v in dominating}
    if len(roots) > 1:
        raise DisconnectedInputError(
            "dominator set did not converge to a single component"
        )
    return frozenset(dominating)


def _check_maximal_independent(g: Graph, s: set[int]) -> tuple[bool, tuple | None]:
    for u in sorted(s):
        for v in g.adjacency[u]:
            if v in s and v > u:
                return False, ("adjacent-pair", u, v)
    for v in range(g.node_count):
        if v not in s and not any(w in s for w in g.adjacency[v]):
            return False, ("addable-vertex", v)
    return True, None


def synergy_layers(
    g: Graph, d: Iterable[int], k: int, strict: bool = False
) -> tuple[frozenset[int], tuple[frozenset[int], ...]]:
    """Phase 3 with its layer decomposition exposed.

    Layer 1 is the isolation output; layer i is a maximal independent set
    of the subgraph induced by the nodes not yet in any layer, built
    independently on each connected component of that residual.  Layers
    are unioned into the backbone; the loop stops early once the residual
    empties, after which k-dominance holds vacuously.

    Any node still outside the backbone after k layers with fewer than k
    dominator neighbours is an infeasibility witness: strict mode raises,
    best-effort mode (default) promotes the witness itself.
    """
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k!r}")
    backbone = set(_as_valid_cds(g, d))
    layer_one, _ = isolation(g)
    if not layer_one <= backbone:
        raise GraphInputError("input set must contain the first independent layer")

    layers: list[frozenset[int]] = [layer_one]
    covered = set(layer_one)
    for _ in range(2, k + 1):
        residual = [v for v in range(g.node_count) if v not in covered]
        if not residual:
            break
        adj = {
            v: tuple(w for w in g.adjacency[v] if w not in covered) for v in residual
        }
        roles = {v: Role.DOMINATION_PRONE for v in residual}
        layer: list[int] = []
        for comp in connected_components(g, residual):
            layer.extend(_greedy_mis_component(comp, adj, roles))
        layers.append(frozenset(layer))
        covered.update(layer)
        backbone.update(layer)

    while True:
        deficient = None
        for v in range(g.node_count):
            if v in backbone:
                continue
            count = sum(1 for w in g.adjacency[v] if w in backbone)
            if count < k:
                deficient = (v, count)
                break
        if deficient is None:
            break
        if strict:
            raise InfeasibleKDominanceError(deficient[0], deficient[1], k)
        backbone.add(deficient[0])
    return frozenset(backbone), tuple(layers)


def synergy(g: Graph, d: Iterable[int], k: int, strict: bool = False) -> frozenset[int]:
    """Phase 3: stack independent layers until every outside node has k
    dominator neighbours.  See :func:`synergy_layers`."""
    backbone, _ = synergy_layers(g, d, k, strict)
    return backbone


def _as_valid_cds(g: Graph, d: Iterable[int]) -> list[int]:
    nodes = sorted(set(d))
    if not nodes:
        raise GraphInputError("dominating set must be non-empty")
    member = set(nodes)
    for v in nodes:
        if not 0 <= v < g.node_count:
            raise GraphInputError(f"node {v} out of range")
    for v in range(g.node_count):
        if v not in member and not any(w in member for w in g.adjacency[v]):
            raise GraphInputError(f"input set does not dominate node {v}")
    if not is_connected(g, nodes):
        raise DisconnectedInputError("input set does not induce a connected subgraph")
    return nodes


def _multi_target_distances(
    g: Graph, targets: set[int], blocked: set[int], forbidden: set[int]
) -> dict[int, int]:
    """Backward BFS layering for augmentation paths.

    Distance 0 sits on the targets; expansion proceeds only through nodes
    outside ``blocked`` (the backbone) and outside ``forbidden``.  Nodes in
    ``blocked`` still receive a distance (as potential path starts) but are
    never expanded.
    """
    dist: dict[int, int] = {t: 0 for t in targets}
    queue = deque(sorted(targets))
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        if dist[x] > 0 and x in blocked:
            continue
        for y in g.adjacency[x]:
            if y in dist or y in forbidden:
                continue
            dist[y] = d
            queue.append(y)
    return dist


def _walk_augmentation_path(
    g: Graph,
    start: int,
    dist: Mapping[int, int],
    blocked: set[int],
) -> list[int]:
    """Forward greedy walk down the BFS layering: always the smallest-id
    next hop, yielding the lexicographically smallest shortest sequence."""
    path = [start]
    cur, d = start, dist[start]
    while d > 0:
        best = None
        for y in g.adjacency[cur]:
            if dist.get(y) != d - 1:
                continue
            if d - 1 > 0 and y in blocked:
                continue
            if best is None or y < best:
                best = y
        path.append(best)
        cur, d = best, d - 1
    return path


def _augment_leaf_block(
    g: Graph, backbone: set[int], base: set[int], forbidden: set[int]
) -> tuple[list[int], tuple[int, int]] | None:
    """One leaf-block augmentation step on the connected, not yet
    2-connected set ``base`` (the backbone, or the backbone minus a bad
    point).

    Picks the leaf block with the smallest member, then the shortest path
    in g from a non-cut member of that block to any base vertex outside
    it, all internal vertices outside the backbone and ``forbidden``.
    Returns (promoted internals, path endpoints) or None when no such path
    exists.
    """
    tree = block_cut_tree(g, base)
    leaf = tree.leaf_blocks[0]
    sources = sorted(leaf - tree.cut_vertices)
    targets = base - leaf
    dist = _multi_target_distances(g, targets, backbone, forbidden)
    best_path: list[int] | None = None
    for a in sources:
        if a not in dist:
            continue
        candidate = _walk_augmentation_path(g, a, dist, backbone)
        if best_path is None or (len(candidate), candidate) < (len(best_path), best_path):
            best_path = candidate
    if best_path is None:
        return None
    return best_path[1:-1], (best_path[0], best_path[-1])


def _alternate_pair_path(
    g: Graph, u: int, v: int, backbone: set[int], forbidden: set[int]
) -> list[int] | None:
    """Shortest second route between two adjacent backbone members: length
    at least two, internal vertices outside the backbone and ``forbidden``.
    The length-2 case promotes the lowest-id common neighbour, closing a
    triangle."""

    def allowed(x: int) -> bool:
        return x not in backbone and x not in forbidden

    return _lex_shortest_path(g, u, v, allowed, exclude_direct_edge=True)


def _resolve_cap(g: Graph, max_iterations: int | None) -> int:
    if max_iterations is not None:
        return max_iterations
    return max(1, 10 * g.node_count)


def diversification(
    g: Graph, d: Iterable[int], max_iterations: int | None = None
) -> frozenset[int]:
    """Phase 4: grow the backbone until it is 2-connected (at least three
    vertices, no cut vertex).

    Each round decomposes the backbone into blocks and reconnects the
    smallest leaf block to the rest through promoted outside vertices.
    Backbones of one or two vertices are grown directly: a lone dominator
    first adopts its smallest neighbour, and a dominator pair is joined by
    its shortest alternate route (a common neighbour when one exists).
    Additions never reduce any outside node's dominator count, so
    k-dominance survives the phase.
    """
    backbone = set(_subset_nodes(g, d))
    if not is_connected(g, backbone):
        raise DisconnectedInputError("input set does not induce a connected subgraph")
    cap = _resolve_cap(g, max_iterations)
    iterations = 0
    while not (len(backbone) >= 3 and _strictly_biconnected(g, backbone)):
        iterations += 1
        if iterations > cap:
            raise IterationCapExceededError("diversification", cap)
        if len(backbone) == g.node_count:
            raise Infeasible2ConnectivityError(tuple(backbone))
        if len(backbone) == 1:
            (v,) = backbone
            if not g.adjacency[v]:
                raise Infeasible2ConnectivityError((v,))
            backbone.add(g.adjacency[v][0])
            continue
        if len(backbone) == 2:
            u, v = sorted(backbone)
            path = _alternate_pair_path(g, u, v, backbone, set())
            if path is None:
                raise Infeasible2ConnectivityError((u, v))
            backbone.update(path[1:-1])
            continue
        step = _augment_leaf_block(g, backbone, backbone, set())
        if step is None:
            stuck = block_cut_tree(g, backbone).leaf_blocks[0]
            raise Infeasible2ConnectivityError(tuple(stuck))
        backbone.update(step[0])
    return frozenset(backbone)


def _subset_nodes(g: Graph, d: Iterable[int]) -> list[int]:
    nodes = sorted(set(d))
    if not nodes:
        raise GraphInputError("backbone must be non-empty")
    for v in nodes:
        if not 0 <= v < g.node_count:
            raise GraphInputError(f"node {v} out of range")
    return nodes


def _first_bad_point(g: Graph, backbone: set[int], known_good: set[int]) -> int | None:
    """Lowest-id backbone vertex whose removal leaves the backbone not
    2-connected.  ``known_good`` carries vertices proven good earlier;
    augmentations only invalidate the ear endpoints (see sustainability)."""
    for v in sorted(backbone):
        if v in known_good:
            continue
        if _strictly_biconnected(g, backbone - {v}):
            known_good.add(v)
        else:
            return v
    return None


def sustainability(
    g: Graph, d: Iterable[int], max_iterations: int | None = None
) -> frozenset[int]:
    """Phase 5: grow the 2-connected backbone until it is 3-connected.

    A backbone vertex is a bad point when removing it leaves the rest not
    2-connected; a 2-connected backbone with no bad point is 3-connected.
    Rounds pick the lowest-id bad point v and run the diversification
    augmentation on the backbone minus v, with paths avoiding v entirely.

    Every augmentation adds an open ear between two retained vertices,
    which keeps the backbone-minus-x 2-connected for every x proven good
    before, except possibly the ear endpoints; only those (and the new
    vertices) are re-examined.
    """
    backbone = set(_subset_nodes(g, d))
    if not (len(backbone) >= 3 and _strictly_biconnected(g, backbone)):
        raise GraphInputError("sustainability requires a 2-connected input set")
    cap = _resolve_cap(g, max_iterations)
    iterations = 0
    known_good: set[int] = set()
    while True:
        bad = _first_bad_point(g, backbone, known_good)
        if bad is None:
            break
        iterations += 1
        if iterations > cap:
            raise IterationCapExceededError("sustainability", cap)
        base = backbone - {bad}
        if len(base) == 2:
            u, v = sorted(base)
            path = _alternate_pair_path(g, u, v, backbone, {bad})
            if path is None:
                raise Infeasible3ConnectivityError(bad)
            internals, endpoints = path[1:-1], (u, v)
        else:
            step = _augment_leaf_block(g, backbone, base, {bad})
            if step is None:
                raise Infeasible3ConnectivityError(bad)
            internals, endpoints = step
        backbone.update(internals)
        known_good.discard(endpoints[0])
        known_good.discard(endpoints[1])
    return frozenset(backbone)


def run_plutus(g: Graph, cfg: PlutusConfig) -> PlutusResult:
    """Run the full pipeline on a connected graph.

    For m >= 2 the graph itself must be m-connected (no m-connected
    backbone can exist otherwise); this is checked up front.  Phases after
    synergy run only when the connectivity target asks for them.  The
    result records the backbone, one trace entry per executed phase and
    the final role of every node.
    """
    result, _ = timed_run(g, cfg)
    return result


def timed_run(g: Graph, cfg: PlutusConfig) -> tuple[PlutusResult, dict[str, int]]:
    """:func:`run_plutus` plus wall time per phase in microseconds."""
    if g.node_count == 0:
        raise EmptyGraphError("pipeline needs at least one node")
    if not is_connected(g):
        raise DisconnectedInputError("pipeline requires a connected graph")
    if cfg.m >= 2 and not is_m_connected(g, range(g.node_count), cfg.m):
        raise GraphNotMConnectedError(cfg.m)

    timings: dict[str, int] = {}
    trace: list[PhaseTrace] = []

    def record(name: str, before: set[int], after: frozenset[int], t0: float) -> None:
        timings[name] = int((time.perf_counter() - t0) * 1_000_000)
        trace.append(PhaseTrace(name, len(after), tuple(sorted(after - before))))

    t0 = time.perf_counter()
    mis, _ = isolation(g)
    record("isolation", set(), mis, t0)

    t0 = time.perf_counter()
    connected = domination(g, mis)
    record("domination", set(mis), connected, t0)

    t0 = time.perf_counter()
    backbone, _ = synergy_layers(g, connected, cfg.k, cfg.strict_k_dominance)
    record("synergy", set(connected), backbone, t0)

    if cfg.m >= 2:
        t0 = time.perf_counter()
        widened = diversification(g, backbone, cfg.max_augmentation_iterations)
        record("diversification", set(backbone), widened, t0)
        backbone = widened
    if cfg.m == 3:
        t0 = time.perf_counter()
        hardened = sustainability(g, backbone, cfg.max_augmentation_iterations)
        record("sustainability", set(backbone), hardened, t0)
        backbone = hardened

    roles = tuple(
        Role.DOMINATOR if v in backbone else Role.DOMINATION_RELUCTANT
        for v in range(g.node_count)
    )
    return PlutusResult(frozenset(backbone), tuple(trace), roles), timings
