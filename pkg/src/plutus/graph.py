"""Undirected graph substrate: construction, traversal, block decomposition,
and exact vertex-connectivity tests.

All types are immutable after construction and all operations are pure
functions, so values can be shared freely across threads.  Every iteration
order (neighbour lists, component lists, block lists, path tie-breaks) is
sorted or lexicographic, which makes every downstream consumer
deterministic.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import DisconnectedInputError, GraphInputError, SelfLoopError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``0 .. node_count - 1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Instances
    are expected to come from :func:`from_edge_list` or :func:`from_points`,
    which guarantee symmetry, no self-loops and no parallel edges.
    """

    node_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.node_count

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once, as (u, v) with u < v, in ascending order."""
        for u in range(self.node_count):
            for v in self.adjacency[u]:
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


@dataclass(frozen=True)
class BlockCutTree:
    """Biconnected components of a connected (induced) subgraph.

    ``blocks`` are maximal 2-connected vertex sets, sorted by smallest
    member; ``cut_vertices`` are the vertices lying in two or more blocks;
    ``leaf_blocks`` are the blocks containing exactly one cut vertex
    (empty when there is a single block).
    """

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    leaf_blocks: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class DistanceReport:
    """Hop distance of a node pair in the graph versus through a backbone.

    ``d_backbone`` is the length of the shortest path whose internal
    vertices all lie in the backbone; it is never below ``d_g``.
    """

    pair: Edge
    d_g: int
    d_backbone: int

    @property
    def stretch(self) -> float:
        return self.d_backbone / self.d_g


def _check_node(g: Graph, v: int, what: str = "node") -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < g.node_count:
        raise GraphInputError(f"{what} {v!r} out of range 0..{g.node_count - 1}")


def _as_subset(g: Graph, subset: Iterable[int]) -> list[int]:
    """Validate and return the subset as a sorted, deduplicated list."""
    nodes = sorted(set(subset))
    for v in nodes:
        _check_node(g, v, "subset node")
    return nodes


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """Build a simple symmetric graph from an edge list.

    Duplicate edges (in either orientation) are collapsed.  Self-loops and
    out-of-range ids are rejected.
    """
    if not isinstance(n, int) or n < 0:
        raise GraphInputError(f"node count must be a non-negative integer, got {n!r}")
    neighbor_sets: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (isinstance(u, int) and isinstance(v, int)):
            raise GraphInputError(f"edge ({u!r}, {v!r}) has non-integer endpoint")
        if u == v:
            raise SelfLoopError(f"self-loop on node {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in neighbor_sets)
    return Graph(n, adjacency)


def from_points(points: Sequence[tuple[float, float]], radius: float) -> Graph:
    """Build the unit-disk graph of a point set: edge iff the euclidean
    distance is at most ``radius`` (closed disk, so a tie at exactly the
    radius produces an edge).  Comparison is done on squared distances.
    """
    if not (isinstance(radius, (int, float)) and math.isfinite(radius) and radius > 0):
        raise GraphInputError(f"radius must be a positive finite real, got {radius!r}")
    pts: list[tuple[float, float]] = []
    for i, p in enumerate(points):
        x, y = float(p[0]), float(p[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise GraphInputError(f"point {i} has non-finite coordinates {p!r}")
        pts.append((x, y))
    n = len(pts)
    r2 = float(radius) * float(radius)
    edges: list[Edge] = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            dx = xi - pts[j][0]
            dy = yi - pts[j][1]
            if dx * dx + dy * dy <= r2:
                edges.append((i, j))
    return from_edge_list(n, edges)


def hop_distance(g: Graph, u: int, v: int) -> int | None:
    """BFS hop count between u and v; 0 when u == v, None when unreachable."""
    _check_node(g, u)
    _check_node(g, v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.adjacency[x]:
            if y not in dist:
                if y == v:
                    return d
                dist[y] = d
                queue.append(y)
    return None


def shortest_path(
    g: Graph,
    u: int,
    v: int,
    forbidden: Iterable[int] = (),
    internal_constraint: Callable[[int], bool] | None = None,
) -> list[int] | None:
    """Deterministic constrained shortest path from u to v.

    Internal vertices must avoid ``forbidden`` and satisfy
    ``internal_constraint``; the endpoints are exempt from the constraint
    but must not themselves be forbidden.  Among all shortest admissible
    paths the lexicographically smallest vertex sequence is returned.
    Returns None when no admissible path exists.
    """
    banned = frozenset(forbidden)
    _check_node(g, u)
    _check_node(g, v)
    if u in banned or v in banned:
        raise GraphInputError("path endpoints must not be forbidden")
    if u == v:
        return [u]

    def allowed(x: int) -> bool:
        if x in banned:
            return False
        return internal_constraint is None or internal_constraint(x)

    return _lex_shortest_path(g, u, v, allowed)


def _lex_shortest_path(
    g: Graph,
    u: int,
    v: int,
    allowed: Callable[[int], bool],
    exclude_direct_edge: bool = False,
) -> list[int] | None:
    """Lexicographically smallest shortest u-v path whose internal vertices
    all satisfy ``allowed``.  With ``exclude_direct_edge`` the single-edge
    path (u, v) is ruled out, forcing an alternate route of length >= 2.
    """
    # Backward BFS from v so the forward greedy walk can always step onto
    # a neighbour one layer closer to v.
    dist = {v: 0}
    queue = deque([v])
    found = False
    while queue and not found:
        x = queue.popleft()
        d = dist[x] + 1
        for y in g.adjacency[x]:
            if exclude_direct_edge and x == v and y == u:
                continue
            if y in dist:
                continue
            if y == u:
                dist[y] = d
                found = True
                break
            if allowed(y):
                dist[y] = d
                queue.append(y)
    if u not in dist:
        return None
    path = [u]
    cur, d = u, dist[u]
    while d > 0:
        best = None
        for y in g.adjacency[cur]:
            if dist.get(y) == d - 1 and (d - 1 == 0 or allowed(y)):
                if d - 1 == 0 and y != v:
                    continue
                if best is None or y < best:
                    best = y
        path.append(best)  # always exists: dist[u] is finite
        cur, d = best, d - 1
    return path


def _induced_adjacency(g: Graph, nodes: Sequence[int]) -> dict[int, list[int]]:
    """Adjacency of the induced subgraph, neighbour lists sorted."""
    member = set(nodes)
    return {v: [w for w in g.adjacency[v] if w in member] for v in nodes}


def connected_components(g: Graph, subset: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the (induced) graph, each sorted, listed in
    ascending order of their smallest member."""
    nodes = list(range(g.node_count)) if subset is None else _as_subset(g, subset)
    adj = _induced_adjacency(g, nodes)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        components.append(sorted(comp))
    return components


def is_connected(g: Graph, subset: Iterable[int] | None = None) -> bool:
    """True when the (induced) graph has at most one connected component."""
    return len(connected_components(g, subset)) <= 1


def _biconnected_components(
    adj: Mapping[int, Sequence[int]], nodes: Sequence[int]
) -> list[frozenset[int]]:
    """Vertex sets of the biconnected components of a connected graph,
    via the linear-time articulation-point DFS with an edge stack."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {}
    ptr: dict[int, int] = {}
    edge_stack: list[Edge] = []
    blocks: list[frozenset[int]] = []
    counter = 0
    root = nodes[0]
    disc[root] = low[root] = counter
    counter += 1
    ptr[root] = 0
    stack = [root]
    while stack:
        x = stack[-1]
        row = adj[x]
        advanced = False
        while ptr[x] < len(row):
            y = row[ptr[x]]
            ptr[x] += 1
            if y not in disc:
                parent[y] = x
                disc[y] = low[y] = counter
                counter += 1
                ptr[y] = 0
                edge_stack.append((x, y))
                stack.append(y)
                advanced = True
                break
            if y != parent.get(x) and disc[y] < disc[x]:
                edge_stack.append((x, y))
                if disc[y] < low[x]:
                    low[x] = disc[y]
        if advanced:
            continue
        stack.pop()
        p = parent.get(x)
        if p is None:
            continue
        if low[x] < low[p]:
            low[p] = low[x]
        if low[x] >= disc[p]:
            members: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                members.add(a)
                members.add(b)
                if (a, b) == (p, x):
                    break
            blocks.append(frozenset(members))
    return blocks


def block_cut_tree(g: Graph, subset: Iterable[int]) -> BlockCutTree:
    """Biconnected components, cut vertices and leaf blocks of the subgraph
    induced by ``subset``.  The subset must induce a connected subgraph.

    Blocks are sorted by smallest member; a vertex is a cut vertex iff it
    lies in at least two blocks; a leaf block contains exactly one cut
    vertex (a lone block yields no leaf blocks).  A singleton subset is
    reported as the single block {v}.
    """
    nodes = _as_subset(g, subset)
    if not nodes:
        raise GraphInputError("subset must be non-empty")
    if not is_connected(g, nodes):
        raise DisconnectedInputError("subset does not induce a connected subgraph")
    if len(nodes) == 1:
        return BlockCutTree((frozenset(nodes),), frozenset(), ())
    adj = _induced_adjacency(g, nodes)
    blocks = sorted(_biconnected_components(adj, nodes), key=lambda b: sorted(b))
    membership: dict[int, int] = {}
    for block in blocks:
        for v in block:
            membership[v] = membership.get(v, 0) + 1
    cut_vertices = frozenset(v for v, count in membership.items() if count >= 2)
    if len(blocks) == 1:
        leaf_blocks: tuple[frozenset[int], ...] = ()
    else:
        leaf_blocks = tuple(b for b in blocks if len(b & cut_vertices) == 1)
    return BlockCutTree(tuple(blocks), cut_vertices, leaf_blocks)


def _local_adjacency(g: Graph, nodes: Sequence[int]) -> list[list[int]]:
    """Induced adjacency relabelled onto local indices 0..len(nodes)-1.

    ``nodes`` must be sorted, so local order mirrors node-id order; the
    removal sweeps below run on plain lists for speed.
    """
    index = {v: i for i, v in enumerate(nodes)}
    member = set(nodes)
    return [[index[w] for w in g.adjacency[v] if w in member] for v in nodes]


def _local_connected_and_biconnected(adj: list[list[int]], skip: int = -1) -> bool:
    """True when the local graph minus ``skip`` is connected and has no
    articulation point.  Single iterative DFS; size conventions are the
    callers' concern."""
    n = len(adj)
    root = 1 if skip == 0 else 0
    remaining = n - 1 if 0 <= skip < n else n
    if remaining <= 0 or root >= n:
        return False
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    disc[root] = 0
    counter = 1
    root_children = 0
    stack = [root]
    while stack:
        x = stack[-1]
        row = adj[x]
        advanced = False
        while ptr[x] < len(row):
            y = row[ptr[x]]
            ptr[x] += 1
            if y == skip:
                continue
            if disc[y] < 0:
                parent[y] = x
                disc[y] = low[y] = counter
                counter += 1
                if x == root:
                    root_children += 1
                stack.append(y)
                advanced = True
                break
            if y != parent[x] and disc[y] < low[x]:
                low[x] = disc[y]
        if advanced:
            continue
        stack.pop()
        p = parent[x]
        if p < 0:
            continue
        if low[x] < low[p]:
            low[p] = low[x]
        if p != root and low[x] >= disc[p]:
            return False
    if root_children > 1:
        return False
    return counter == remaining


def _local_connected_after_removal(adj: list[list[int]], skip: int) -> bool:
    n = len(adj)
    root = 1 if skip == 0 else 0
    remaining = n - 1 if 0 <= skip < n else n
    if remaining <= 0 or root >= n:
        return False
    seen = [False] * n
    seen[root] = True
    count = 1
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y != skip and not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    return count == remaining


def _strictly_biconnected(g: Graph, subset: Iterable[int]) -> bool:
    """Strict 2-connectivity of the induced subgraph: at least three
    vertices, connected, and free of articulation points."""
    nodes = _as_subset(g, subset)
    if len(nodes) < 3:
        return False
    return _local_connected_and_biconnected(_local_adjacency(g, nodes))


def is_m_connected(g: Graph, subset: Iterable[int], m: int) -> bool:
    """Exact m-connectivity (m in 1..3) of the subgraph induced by ``subset``:
    it stays connected after removal of any m-1 of its vertices.

    m = 1 is plain connectivity (a singleton counts as connected).  For
    m >= 2 a subset of at most m vertices never qualifies: the complete
    graph on n vertices is only (n-1)-connected.  m = 2 removes each vertex
    in turn; m = 3 checks, for each removed vertex, that the remainder is
    connected with no articulation point, which is exactly the exhaustive
    pair-removal test evaluated one batch per removed vertex.
    """
    if m not in (1, 2, 3):
        raise GraphInputError(f"m must be 1, 2 or 3, got {m!r}")
    nodes = _as_subset(g, subset)
    if not nodes:
        raise GraphInputError("subset must be non-empty")
    if m == 1:
        return is_connected(g, nodes)
    if len(nodes) <= m:
        return False
    local = _local_adjacency(g, nodes)
    if m == 2:
        return all(
            _local_connected_after_removal(local, v) for v in range(len(nodes))
        )
    return all(
        _local_connected_and_biconnected(local, skip=v) for v in range(len(nodes))
    )
