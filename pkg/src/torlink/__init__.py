"""torlink: forbidden-minor graph predicates, torus-diagram link detection,
and the census/certification pipeline for maximal toroidal-linkless graphs."""

from .canonical import canonical_form, canonical_graph, is_isomorphic
from .containment import has_minor, is_subgraph_iso
from .errors import (
    DataValidationError,
    ParseError,
    TorlinkError,
    UnsupportedOrderError,
)
from .graph6 import decode_graph6, encode_graph6, read_graph6_file
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_cycles,
    path_graph,
    petersen_graph,
)
from .oracles import (
    ObstructionDB,
    is_maxnil,
    is_mtn,
    is_nil,
    is_tn,
    is_toroidal,
    order8_obstructions,
    petersen_family,
)
from .search import (
    CensusReport,
    CertificationReport,
    SearchContext,
    census_maxnil,
    certify_order,
    classify_maxnil,
    extract_obstruction_set,
    find_all_mtn_order9,
    isomorphism_classes,
    load_search_context,
    mtn_search,
    verify_size19_exclusion,
)
from .torus import (
    CrossingMatrix,
    LinkWitness,
    SlopeClass,
    TorusDiagram,
    crossing_matrix,
    cycle_crossing_sums,
    cycle_slope,
    embedding_warnings,
    find_links,
    format_embedding,
    is_linkless,
    parse_embedding,
    torus_link_linking_number,
)

__all__ = [
    "CensusReport",
    "CertificationReport",
    "CrossingMatrix",
    "DataValidationError",
    "Graph",
    "LinkWitness",
    "ObstructionDB",
    "ParseError",
    "SearchContext",
    "SlopeClass",
    "TorlinkError",
    "TorusDiagram",
    "UnsupportedOrderError",
    "canonical_form",
    "canonical_graph",
    "census_maxnil",
    "certify_order",
    "classify_maxnil",
    "complete_bipartite",
    "complete_graph",
    "crossing_matrix",
    "cycle_crossing_sums",
    "cycle_graph",
    "cycle_slope",
    "decode_graph6",
    "disjoint_union",
    "embedding_warnings",
    "empty_graph",
    "encode_graph6",
    "enumerate_cycles",
    "extract_obstruction_set",
    "find_all_mtn_order9",
    "find_links",
    "format_embedding",
    "has_minor",
    "is_isomorphic",
    "is_linkless",
    "is_maxnil",
    "is_mtn",
    "is_nil",
    "is_subgraph_iso",
    "is_tn",
    "is_toroidal",
    "isomorphism_classes",
    "load_search_context",
    "mtn_search",
    "order8_obstructions",
    "parse_embedding",
    "path_graph",
    "petersen_family",
    "petersen_graph",
    "read_graph6_file",
    "torus_link_linking_number",
    "verify_size19_exclusion",
]
