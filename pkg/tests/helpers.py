"""Independent reference implementations used to cross-check the package.

Everything here deliberately avoids the library's own algorithms: the
m-connectivity twin enumerates removal subsets literally, and the path
counter runs unit-capacity augmentation on a vertex-split digraph
(Menger's view of connectivity).
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from plutus import Graph, from_edge_list
from plutus.geometry import splitmix64


def random_graph(seed: int, max_nodes: int = 9, edge_bias: int = 2) -> Graph:
    """Deterministic small random graph from a seed; edge present when a
    splitmix64 draw mod ``edge_bias + 1`` is nonzero."""
    n = 2 + splitmix64(seed, 0) % (max_nodes - 1)
    edges = []
    counter = 1
    for u in range(n):
        for v in range(u + 1, n):
            if splitmix64(seed, counter) % (edge_bias + 1):
                edges.append((u, v))
            counter += 1
    return from_edge_list(n, edges)


def random_connected_graph(seed: int, max_nodes: int = 9) -> Graph:
    """Deterministic connected random graph: a scrambled spanning path plus
    random extra edges."""
    n = 2 + splitmix64(seed, 0) % (max_nodes - 1)
    order = sorted(range(n), key=lambda v: splitmix64(seed, 100 + v))
    edges = [(order[i], order[i + 1]) for i in range(n - 1)]
    counter = 1
    for u in range(n):
        for v in range(u + 1, n):
            if splitmix64(seed, counter) % 3 == 0:
                edges.append((u, v))
            counter += 1
    return from_edge_list(n, edges)


def induced_connected(g: Graph, nodes: set[int]) -> bool:
    if not nodes:
        return False
    start = next(iter(sorted(nodes)))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y in nodes and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen == nodes


def naive_m_connected(g: Graph, subset, m: int) -> bool:
    """Literal removal-subset semantics: connected after deleting any m-1
    members; sets of at most m vertices never qualify for m >= 2."""
    nodes = set(subset)
    if m == 1:
        return induced_connected(g, nodes)
    if len(nodes) <= m:
        return False
    for removed in combinations(sorted(nodes), m - 1):
        if not induced_connected(g, nodes - set(removed)):
            return False
    return True


def vertex_disjoint_paths(g: Graph, nodes: set[int], s: int, t: int, cap: int) -> int:
    """Number of internally vertex-disjoint s-t paths in the induced
    subgraph, counted up to ``cap`` by unit-capacity augmentation on the
    standard vertex-split digraph (s and t uncapacitated).  The direct
    edge, when present, counts as one path."""
    order = sorted(nodes)
    index = {v: i for i, v in enumerate(order)}
    n = len(order)
    n_in = lambda i: 2 * i
    n_out = lambda i: 2 * i + 1
    arcs: dict[int, dict[int, int]] = {}

    def add_arc(a: int, b: int, capacity: int) -> None:
        arcs.setdefault(a, {})[b] = capacity
        arcs.setdefault(b, {}).setdefault(a, 0)

    for v in order:
        i = index[v]
        add_arc(n_in(i), n_out(i), cap if v in (s, t) else 1)
    for v in order:
        for w in g.adjacency[v]:
            if w in nodes:
                add_arc(n_out(index[v]), n_in(index[w]), 1)
    source, sink = n_out(index[s]), n_in(index[t])
    flow = 0
    while flow < cap:
        parent = {source: None}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, capacity in arcs.get(x, {}).items():
                if capacity > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            arcs[prev][node] -= 1
            arcs[node][prev] += 1
            node = prev
        flow += 1
    return flow


def menger_m_connected(g: Graph, subset, m: int) -> bool:
    """m-connectivity via path counting: at least m internally disjoint
    paths between every pair (sets of at most m vertices excluded for
    m >= 2, singletons connected for m = 1)."""
    nodes = set(subset)
    if m == 1:
        return induced_connected(g, nodes)
    if len(nodes) <= m:
        return False
    order = sorted(nodes)
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if vertex_disjoint_paths(g, nodes, order[i], order[j], m) < m:
                return False
    return True


def replay_witness(g: Graph, subset: set[int], k: int, witness: tuple) -> None:
    """Re-derive a checker's failure verdict from its witness alone."""
    tag = witness[0]
    if tag == "deficient":
        _, v, count = witness
        assert v not in subset
        assert sum(1 for w in g.adjacency[v] if w in subset) == count < k
    elif tag == "undominated":
        v = witness[1]
        assert v not in subset
        assert not any(w in subset for w in g.adjacency[v])
    elif tag == "too-small":
        assert witness[1] == len(subset)
    elif tag == "disconnecting-set":
        removed = set(witness[1])
        assert removed <= subset
        assert not induced_connected(g, subset - removed)
    elif tag == "disconnected":
        component = set(witness[1])
        assert component < subset
        for u in component:
            for w in g.adjacency[u]:
                assert w not in subset - component
    elif tag == "adjacent-pair":
        _, u, v = witness
        assert u in subset and v in subset and v in g.adjacency[u]
    elif tag == "addable-vertex":
        v = witness[1]
        assert v not in subset
        assert not any(w in subset for w in g.adjacency[v])
    else:
        raise AssertionError(f"unknown witness {witness}")
