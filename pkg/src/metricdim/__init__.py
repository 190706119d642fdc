"""Resolving sets, metric dimension, and edge-perturbation tooling."""

from .errors import (
    BlockOverlapError,
    BudgetError,
    ConflictingStringsError,
    DisconnectedError,
    DisconnectsGraphError,
    EdgeExistsError,
    EdgeMissingError,
    EmptyLandmarksError,
    EmptyWitnessError,
    EqualStringsError,
    ExceededError,
    InvalidLabelError,
    LengthMismatchError,
    MetricDimError,
    NotARampError,
    NotResolvingError,
    SelfLoopError,
    TooLargeError,
    UnknownVertexError,
    WindowTooSmallError,
)
from .families import (
    KiteSpec,
    NonbinarySpec,
    StripSpec,
    StripVertex,
    TailSpec,
    cross_side_distance,
    kite_graph,
    nonbinary_graph,
    nonbinary_page_blocks,
    nonbinary_ramp_midpoints,
    ramp_midpoint_code,
    same_side_distance,
    strip_canonical_set,
    strip_graph,
    strip_unresolved_pair,
    tail_graph,
)
from .graph import (
    UNREACHABLE,
    Distance,
    DistanceMap,
    Graph,
    add_edge,
    bfs_distances,
    build_graph,
    format_edge_list,
    is_connected,
    max_degree,
    parse_edge_list,
    remove_edge,
    to_dot,
)
from .perturb import (
    EditOp,
    EditSequence,
    EditStep,
    apply_edit_sequence,
    augment_addition,
    augment_removal,
    integer_interval,
    parse_edit_sequence,
)
from .resolving import (
    DimensionResult,
    MetricCode,
    block_lower_bound_check,
    find_unresolved_pair,
    greedy_resolving_set,
    is_resolving,
    metric_code,
    metric_dimension_exact,
    metric_dimension_reference,
)
from .ternary import (
    ConflictReport,
    canonical_conflict_free,
    conflict,
    is_conflict_free,
    max_conflict_free_bruteforce,
)

__version__ = "0.1.0"
