"""Jet graphs of simple graphs and the machinery to verify their properties."""

from .campaigns import CampaignRecord, CampaignReport, recheck_witness, run_campaign
from .chordality import (
    ChordalityReport,
    check_induced_cycle,
    chordality,
    is_cochordal,
    is_simplicial,
    theorem3_witness,
    verify_simplicial_order,
)
from .coloring import Coloring, ImproperInput, chromatic_number, is_proper, lift_coloring
from .covers import (
    NotMinimalCover,
    is_minimal_cover,
    is_vertex_cover,
    is_very_well_covered,
    is_well_covered,
    knn_cover_family,
    minimal_vertex_covers,
    prop3_cover_even,
    prop3_cover_odd,
    prop4_cover,
)
from .families import (
    FamilySpec,
    InvalidParameter,
    TooLarge,
    TranscriptionError,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_connected_graphs,
    example3_graph,
    favaron_graph,
    make_family,
    path_graph,
    star_graph,
)
from .formats import (
    MalformedEdgeList,
    MalformedGraph6,
    read_edge_list,
    read_graph6,
    read_graphs,
    write_dot,
    write_edge_list,
    write_graph6,
)
from .graphs import (
    DisconnectedInput,
    Graph,
    InvalidVertex,
    bfs_distances,
    complement,
    diameter,
    induced_subgraph,
    is_connected,
    is_isomorphic,
)
from .ideals import (
    JetPolynomial,
    JetVariable,
    MonomialIdeal,
    NonSquarefreeInput,
    NotQuadratic,
    edge_ideal,
    export_macaulay2,
    graph_from_quadratic_ideal,
    jet_ideal_generators,
    radical_jet_generators,
)
from .jets import DiGraph, JetGraph, JetVertex, jet_digraph, jet_graph, jet_vertex_name

__version__ = "0.1.0"
