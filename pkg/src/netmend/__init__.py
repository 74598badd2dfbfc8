"""Connectivity-preserving node replacement for networked multi-agent systems."""

__version__ = "0.1.0"

from .graph import (
    DegreeStats,
    EdgeListError,
    Graph,
    GraphError,
    InducedSubgraph,
    format_edge_list,
    load_edge_list,
    parse_edge_list,
    save_edge_list,
)
from .criticality import (
    CriticalityMap,
    OracleCapError,
    articulation_points,
    compute_criticality,
    delta_sufficient,
    is_critical,
    is_critical_oracle,
    is_delta_critical,
    longest_chordless_cycle,
    noncritical_nodes,
)
from .strategies import (
    ConnectivityViolation,
    ReplacementSequence,
    Strategy,
    StrategyOutcome,
    apply_sequence,
    centralized,
    delta_mps,
    min_degree_mps,
    mps,
    run_removal,
)
from .generators import (
    GenerationError,
    GeneratorKind,
    GeneratorSpec,
    complete,
    cycle,
    erdos_renyi_connected,
    fixture,
    fixture_names,
    path,
    random_tree,
    sample_connected_er,
    star,
)
from .montecarlo import (
    ExperimentConfig,
    ExperimentKind,
    StrategySpec,
    SummaryStats,
    TrialResult,
    bootstrap_mean_gap,
    run_cost_comparison,
    run_depletion,
    run_full_depletion_with_repair,
    summarize,
)
from .rng import derive_rng

__all__ = [
    "__version__",
    "ConnectivityViolation",
    "CriticalityMap",
    "DegreeStats",
    "EdgeListError",
    "ExperimentConfig",
    "ExperimentKind",
    "GenerationError",
    "GeneratorKind",
    "GeneratorSpec",
    "Graph",
    "GraphError",
    "InducedSubgraph",
    "OracleCapError",
    "ReplacementSequence",
    "Strategy",
    "StrategyOutcome",
    "StrategySpec",
    "SummaryStats",
    "TrialResult",
    "apply_sequence",
    "articulation_points",
    "bootstrap_mean_gap",
    "centralized",
    "complete",
    "compute_criticality",
    "cycle",
    "delta_mps",
    "delta_sufficient",
    "derive_rng",
    "erdos_renyi_connected",
    "fixture",
    "fixture_names",
    "format_edge_list",
    "is_critical",
    "is_critical_oracle",
    "is_delta_critical",
    "load_edge_list",
    "longest_chordless_cycle",
    "min_degree_mps",
    "mps",
    "noncritical_nodes",
    "parse_edge_list",
    "path",
    "random_tree",
    "run_cost_comparison",
    "run_depletion",
    "run_full_depletion_with_repair",
    "run_removal",
    "sample_connected_er",
    "save_edge_list",
    "star",
    "summarize",
]
