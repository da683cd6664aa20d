"""Solution discovery on graphs under the token-sliding move model."""

from .assignment import Assignment, CostMatrix, InfeasibleAssignmentError, min_cost_assignment
from .cwdp import DPTable, DPTuple, NodeContext, compute_tables, is_valid_tuple, solve_vcd_cw
from .cwexpr import (
    LabeledGraph,
    WExpression,
    check_irredundant,
    check_matches,
    evaluate,
    parse_expression,
)
from .fvsfpt import (
    CandidateBipartite,
    CompactRepresentation,
    SchedulingDeadlockError,
    build_candidate_bipartite,
    enumerate_compact_representations,
    realize_matching,
    solve_fvsd_fpt,
)
from .graph import (
    DiscoveryInstance,
    Graph,
    GraphError,
    InvalidMoveError,
    Move,
    NotConnectedError,
    ReplayResult,
    SplitPartition,
    build_graph,
    check_solution,
    configurations_adjacent,
    diameter,
    distances_from,
    is_chordal,
    is_connected,
    normalize_budget,
    split_partition,
    validate_sequence,
)
from .oracle import StateSpaceTooLargeError, decide, discover_min_moves
from .reductions import (
    X3CInstance,
    diameterize_fvs,
    diameterize_vc,
    search_to_discovery,
    vcd_to_fvsd,
    x3c_to_vcd,
    x3c_witness_to_moves,
)
from .splitsolver import (
    NotSplitError,
    UnsupportedKindError,
    enumerate_maximal_independent_sets_split,
    enumerate_minimal_fvs_split,
    enumerate_minimal_vertex_covers_split,
    solve_split,
)

__all__ = [name for name in dir() if not name.startswith("_")]
