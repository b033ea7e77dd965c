from __future__ import annotations

import pytest

from plutus import Graph, from_edge_list


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel_graph(rim: int) -> Graph:
    spokes = [(0, i) for i in range(1, rim + 1)]
    ring = [(i, i % rim + 1) for i in range(1, rim + 1)]
    return from_edge_list(rim + 1, spokes + ring)


def structured_graphs() -> dict[str, Graph]:
    """The small named instances used across the suite."""
    return {
        "P3": path_graph(3),
        "P5": path_graph(5),
        "C4": cycle_graph(4),
        "C6": cycle_graph(6),
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K1,4": star_graph(4),
        "W6": wheel_graph(5),
    }


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p5() -> Graph:
    return path_graph(5)


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def c6() -> Graph:
    return cycle_graph(6)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def star4() -> Graph:
    return star_graph(4)


@pytest.fixture
def w6() -> Graph:
    return wheel_graph(5)
