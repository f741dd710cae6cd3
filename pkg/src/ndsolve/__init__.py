"""Neighborhood-diversity toolkit.

Decomposes a graph into same-type vertex classes, exposes the quotient
type graph, and solves three NP-hard problems exactly when the class count
is small: graph motif, vertex-disjoint paths, and precoloring extension.
Brute-force deciders, seeded generators, a bounded integer-feasibility
engine and a command line round out the toolkit for desk-scale
verification.
"""

from .decomposition import (
    TypeGraph,
    TypePartition,
    build_type_graph,
    compute_type_partition,
    compute_vertex_cover,
    same_type,
    verify_partition,
)
from .generate import (
    TypeTemplate,
    generate_from_template,
    random_instance,
    random_template,
    sparse_template,
)
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from .ilp import (
    IlpProblem,
    IlpSolution,
    LinearConstraint,
    propagate_bounds,
    solve_feasibility,
)
from .instances import (
    MotifInstance,
    PathsInstance,
    PrecolorInstance,
    SolveReport,
    validate_coloring_witness,
    validate_motif_witness,
    validate_paths_witness,
)
from .io import ParseError, parse_instance, serialize_instance
from .matching import max_bipartite_matching
from .motif import MotifWitness, solve_motif
from .oracles import SizeGuardError, oracle_motif, oracle_paths, oracle_precolor
from .paths import PathsWitness, route_is_valid, simplify_path, solve_paths
from .precolor import ColoringWitness, reduce_independent_types, solve_precolor

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "complete_bipartite",
    "MotifInstance",
    "PathsInstance",
    "PrecolorInstance",
    "SolveReport",
    "TypePartition",
    "TypeGraph",
    "TypeTemplate",
    "compute_type_partition",
    "build_type_graph",
    "verify_partition",
    "same_type",
    "compute_vertex_cover",
    "parse_instance",
    "serialize_instance",
    "ParseError",
    "generate_from_template",
    "random_template",
    "sparse_template",
    "random_instance",
    "IlpProblem",
    "IlpSolution",
    "LinearConstraint",
    "solve_feasibility",
    "propagate_bounds",
    "max_bipartite_matching",
    "solve_motif",
    "MotifWitness",
    "solve_paths",
    "PathsWitness",
    "route_is_valid",
    "simplify_path",
    "solve_precolor",
    "ColoringWitness",
    "reduce_independent_types",
    "oracle_motif",
    "oracle_paths",
    "oracle_precolor",
    "SizeGuardError",
    "validate_motif_witness",
    "validate_paths_witness",
    "validate_coloring_witness",
]
