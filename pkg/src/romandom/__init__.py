"""Exact Roman domination toolkit.

Computes the domination number, Roman domination number, differential and
Roman bondage number of small graphs by exhaustive search, decides the
vertex-removal stability classes, builds and recognizes the constructive
family of stable trees, and ships a harness that re-verifies every one of
the underlying theorems over all small instances.
"""

from .classify import (
    ClassReport,
    build_class_report,
    in_class_d_cvr,
    in_class_d_uvr,
    in_class_r_cvr,
    in_class_r_uvr,
    is_roman,
    is_urd,
    removal_effect,
    roman_bondage_number,
    vertex_never_one,
)
from .graphs import (
    Graph,
    are_isomorphic,
    boundary,
    build_graph,
    canonical_form,
    complete_bipartite,
    complete_graph,
    connected_components,
    cube_graph,
    cycle_graph,
    delete_edges,
    delete_vertex,
    disjoint_union,
    edgeless_graph,
    figure3_graph,
    is_connected,
    is_tree,
    join_graph,
    parse_graph6,
    path_graph,
    private_neighbors,
    star,
    tree_canonical_key,
    two_cliques_bridge,
    write_graph6,
)
from .kernels import BACKEND
from .labelled import (
    LabelledTree,
    apply_o1,
    apply_o2,
    apply_o3,
    apply_o4,
    base_k12,
    canonical_gamma_r_function,
    decompose_script_t,
    generate_script_t,
    in_t1,
    labelled_r,
    recognize_script_t,
    replay_script,
)
from .solvers import (
    DominationSummary,
    RomanFunction,
    differential_sets,
    differential_value,
    domination_number,
    efficient_dominating_sets,
    gamma_r_functions,
    is_dominating,
    minimum_dominating_sets,
    roman_domination_number,
    tree_unique_gamma_structural,
    validate_rdf,
)
from .streams import connected_graphs, free_trees, read_graph6_stream, unicyclic_graphs

__version__ = "0.1.0"
