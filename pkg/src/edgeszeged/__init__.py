"""Wiener, edge-Wiener, Szeged and edge-Szeged indices of small graphs,
non-isomorphic tree and unicyclic graph enumeration, and exhaustive
verification of extremal edge-Szeged results for unicyclic graphs."""

from .canonical import canonical_form, canonical_graph, canonical_graph6, is_isomorphic
from .constructions import (
    RootedTree,
    broom,
    caterpillar_tree,
    cycle,
    cycle_composition,
    extremal_unicyclic,
    path,
    star,
)
from .enumeration import free_trees, rooted_trees, unicyclic_graphs
from .graph import (
    UNREACHABLE,
    DistanceTable,
    Graph,
    GraphError,
    Kind,
    bfs_distances,
    build_graph,
    classify,
    diameter,
    distance_table,
    find_cycle,
)
from .graph6 import FormatError, graph6_decode, graph6_encode
from .harness import min_edge_szeged, verify_lemma, verify_theorem1
from .invariants import (
    EdgePartition,
    IndexReport,
    VertexPartition,
    edge_partition,
    edge_szeged,
    edge_wiener,
    index_report,
    parity_delta,
    szeged,
    transmission,
    vertex_partition,
    wiener,
)
from .kernels import BACKEND
from .unicyclic import (
    UnicyclicDecomposition,
    composition_m_count,
    consolidate_to_v1,
    cycle_distance_profile,
    decompose,
    edge_szeged_formula,
)

__version__ = "0.1.0"
