"""Greedy construction and verification of resilient backbones:
m-connected k-dominating sets on undirected and unit-disk graphs."""

from .errors import (
    DisconnectedInputError,
    EmptyGraphError,
    GraphInputError,
    GraphNotMConnectedError,
    Infeasible2ConnectivityError,
    Infeasible3ConnectivityError,
    InfeasibleKDominanceError,
    IterationCapExceededError,
    OracleSizeError,
    PlutusError,
    SelfLoopError,
)
from .geometry import UdgInstance, random_geometric, splitmix64, unit_interval
from .graph import (
    BlockCutTree,
    DistanceReport,
    Graph,
    block_cut_tree,
    connected_components,
    from_edge_list,
    from_points,
    hop_distance,
    is_connected,
    is_m_connected,
    shortest_path,
)
from .pipeline import (
    PhaseTrace,
    PlutusConfig,
    PlutusResult,
    Role,
    diversification,
    domination,
    isolation,
    run_plutus,
    sustainability,
    synergy,
    synergy_layers,
    timed_run,
)
from .verify import (
    CheckResult,
    OracleResult,
    VerificationReport,
    backbone_stretch,
    brute_force_min_mcds,
    is_connected_dominating_set,
    is_k_dominating,
    is_m_connected_k_dominating,
    is_maximal_independent_set,
)

__version__ = "0.1.0"

__all__ = [
    "BlockCutTree",
    "CheckResult",
    "DisconnectedInputError",
    "DistanceReport",
    "EmptyGraphError",
    "Graph",
    "GraphInputError",
    "GraphNotMConnectedError",
    "Infeasible2ConnectivityError",
    "Infeasible3ConnectivityError",
    "InfeasibleKDominanceError",
    "IterationCapExceededError",
    "OracleResult",
    "OracleSizeError",
    "PhaseTrace",
    "PlutusConfig",
    "PlutusError",
    "PlutusResult",
    "Role",
    "SelfLoopError",
    "UdgInstance",
    "VerificationReport",
    "backbone_stretch",
    "block_cut_tree",
    "brute_force_min_mcds",
    "connected_components",
    "diversification",
    "domination",
    "from_edge_list",
    "from_points",
    "hop_distance",
    "is_connected",
    "is_connected_dominating_set",
    "is_k_dominating",
    "is_m_connected",
    "is_m_connected_k_dominating",
    "is_maximal_independent_set",
    "isolation",
    "random_geometric",
    "run_plutus",
    "shortest_path",
    "splitmix64",
    "sustainability",
    "synergy",
    "synergy_layers",
    "timed_run",
    "unit_interval",
]
