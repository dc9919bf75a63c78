"""capcycle: exact analysis of budget-capped intransitive allocation games.

An allocation splits an integer budget across k slots. Two allocations
play a game by comparing one uniformly chosen slot value from each side;
the cap forces trade-offs, so dominance between allocations is cyclic
rather than linear. This package enumerates capped strategy spaces,
builds the exact dominance digraph, finds cycles and counter-strategies,
and runs seeded Monte Carlo checks against the exact probabilities.
"""

from .allocations import (
    DEFAULT_SPACE_LIMIT,
    Allocation,
    Partition,
    canonicalize,
    composition_count,
    enumerate_compositions,
    enumerate_partitions,
    format_allocation,
    new_allocation,
    parse_allocation,
    partition_count,
)
from .dominance import (
    ClaimVerdict,
    CycleReport,
    DominanceGraph,
    best_counters,
    build_graph,
    counter_strategy,
    cycle_report,
    find_three_cycles,
    strongly_connected_components,
    undominated,
    verify_universal_counter_claim,
)
from .errors import (
    AllocationError,
    AllTiesError,
    CapcycleError,
    DimensionMismatchError,
    EmptyAllocationError,
    NegativeEntryError,
    SpaceTooLargeError,
)
from .matchups import (
    Cell,
    MatchupTable,
    SeriesOutcome,
    TiePolicy,
    dominates,
    matchup_table,
    series_outcome,
    win_probability,
)
from .report import (
    AnalysisReport,
    CounterEntry,
    analysis_from_json_dict,
    analysis_json_dict,
    analyze,
    emit_dot,
    emit_matchup_csv,
    emit_matchup_grid,
    graph_json_dict,
    matchup_json_dict,
    matchup_summary_line,
    render_analysis_text,
    simulation_json_dict,
    to_json_text,
)
from .simulate import (
    SeriesStats,
    SimConfig,
    prng_next,
    sample_cell,
    series_seed_states,
    simulate_best_of,
    simulate_games,
)

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "AllocationError",
    "AllTiesError",
    "AnalysisReport",
    "CapcycleError",
    "Cell",
    "ClaimVerdict",
    "CounterEntry",
    "CycleReport",
    "DEFAULT_SPACE_LIMIT",
    "DimensionMismatchError",
    "DominanceGraph",
    "EmptyAllocationError",
    "MatchupTable",
    "NegativeEntryError",
    "Partition",
    "SeriesOutcome",
    "SeriesStats",
    "SimConfig",
    "SpaceTooLargeError",
    "TiePolicy",
    "analysis_from_json_dict",
    "analysis_json_dict",
    "analyze",
    "best_counters",
    "build_graph",
    "canonicalize",
    "composition_count",
    "counter_strategy",
    "cycle_report",
    "dominates",
    "emit_dot",
    "emit_matchup_csv",
    "emit_matchup_grid",
    "enumerate_compositions",
    "enumerate_partitions",
    "find_three_cycles",
    "format_allocation",
    "graph_json_dict",
    "matchup_json_dict",
    "matchup_summary_line",
    "matchup_table",
    "new_allocation",
    "parse_allocation",
    "partition_count",
    "prng_next",
    "render_analysis_text",
    "sample_cell",
    "series_outcome",
    "series_seed_states",
    "simulate_best_of",
    "simulate_games",
    "simulation_json_dict",
    "strongly_connected_components",
    "to_json_text",
    "undominated",
    "verify_universal_counter_claim",
    "win_probability",
]
