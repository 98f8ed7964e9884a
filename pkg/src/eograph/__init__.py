"""Finite pointed edge-ordered digraphs and their lexicographic searches."""

from ._backend import COMPILED
from .categories import CategoryKind, is_object_of, object_violation
from .errors import *  # noqa: F401,F403
from .functors import (
    STAGE_LABELS,
    StagePipeline,
    e_order,
    f_closure,
    gamma_closure,
    l_tree,
    loset_to_star,
    run_pipeline,
    s_tree,
    theta,
)
from .graph import EdgeOrderedGraph, is_connected, validate
from .io import emit_dot, emit_eog, emit_map, parse_eog, parse_map
from .morphisms import (
    AdjunctionReport,
    Functor,
    MorphismKind,
    VertexMap,
    apply_functor,
    check_adjunction,
    enumerate_homs,
    hom_set,
    is_arrow,
    is_morphism,
    morphism_violation,
)
from .paths import (
    PathComparison,
    compare_lex,
    compare_shortlex,
    enumerate_proper_paths,
    is_path,
    is_proper,
    longest_common_prefix,
    longest_path,
    min_path,
    min_shortest_path,
    oracle_min_path,
)
from .traversals import (
    LinearOrder,
    canonical_path,
    check_fo_bft,
    check_fo_dft,
    lex_bfs,
    lex_dfs,
    predecessor_map,
)

__version__ = "0.1.0"
