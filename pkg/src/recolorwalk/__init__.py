"""Recoloring walks between proper graph colorings.

Given a graph of bounded maximum average degree (or bounded degeneracy) and
two proper k-colorings, construct an explicit walk between them that
recolors one vertex at a time and stays proper throughout, with per-vertex
recoloring counts bounded by documented recurrences. Exhaustive oracles
certify everything at desk scale.
"""

from .errors import (
    GraphFormatError,
    ImproperInput,
    PaletteTooSmall,
    RecolorwalkError,
    SequenceViolation,
    SizeGuaranteeViolated,
    StateSpaceTooLarge,
)
from .graphs import (
    Coloring,
    Graph,
    Rational,
    degeneracy_ordering,
    is_proper,
    mad_brute,
    mad_exact,
    parse_coloring,
    parse_graph,
    serialize_coloring,
    serialize_graph,
)
from .layering import (
    DegreePartition,
    EmbeddedOrdering,
    LayeredSubgraphRef,
    SpecialISParams,
    build_degree_partition,
    degree_partition_from_degeneracy,
    embedded_ordering,
    later_layer_degree,
    partition_round_bound,
    serialize_partition,
    special_independent_set,
    validate_partition,
)
from .engine import (
    EliminationTrace,
    RecolorStats,
    RecoloringSequence,
    RecoloringStep,
    WorkSets,
    clear_layer_color,
    elim_bound,
    eliminate_color,
    greedy_promote,
    recolor_between,
    recolor_theorem_pipeline,
    reduce_palette,
    sequence_stats,
    verify_sequence,
    walk_bound,
)
from .oracle import (
    DEFAULT_STATE_CAP,
    bfs_distance,
    count_proper_colorings,
    decode_coloring,
    encode_coloring,
    enumerate_special_is,
    exact_diameter,
)

__all__ = [
    "Coloring",
    "DEFAULT_STATE_CAP",
    "DegreePartition",
    "EliminationTrace",
    "EmbeddedOrdering",
    "Graph",
    "GraphFormatError",
    "ImproperInput",
    "LayeredSubgraphRef",
    "PaletteTooSmall",
    "Rational",
    "RecolorStats",
    "RecoloringSequence",
    "RecoloringStep",
    "RecolorwalkError",
    "SequenceViolation",
    "SizeGuaranteeViolated",
    "SpecialISParams",
    "StateSpaceTooLarge",
    "WorkSets",
    "bfs_distance",
    "build_degree_partition",
    "clear_layer_color",
    "count_proper_colorings",
    "decode_coloring",
    "degeneracy_ordering",
    "degree_partition_from_degeneracy",
    "elim_bound",
    "eliminate_color",
    "embedded_ordering",
    "encode_coloring",
    "enumerate_special_is",
    "exact_diameter",
    "greedy_promote",
    "is_proper",
    "later_layer_degree",
    "mad_brute",
    "mad_exact",
    "parse_coloring",
    "parse_graph",
    "partition_round_bound",
    "recolor_between",
    "recolor_theorem_pipeline",
    "reduce_palette",
    "sequence_stats",
    "serialize_coloring",
    "serialize_graph",
    "serialize_partition",
    "special_independent_set",
    "validate_partition",
    "verify_sequence",
    "walk_bound",
]

__version__ = "0.1.0"
