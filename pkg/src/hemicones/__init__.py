"""Exact enumeration toolkit for cones of hemimetrics.

Three nested families of polyhedral cones live in the space indexed by the
(m+1)-subsets of {1..n}: the cone of m-hemimetrics cut out by the simplex
inequalities, its intersection with the nonnegative orthant, and the subcone
generated by partition vectors.  The package computes extreme rays and
facets in exact integer arithmetic, decomposes them into orbits of the
coordinate action of the symmetric group, builds skeleton and ridge graphs,
and verifies structural conjectures about those graphs.
"""

from .cache import ResultCache, default_cache_dir
from .cones import (
    ConeH,
    ConeV,
    LinearInequality,
    build_cone_h,
    build_cone_p,
    classify_normal,
    classify_ray,
    enumerate_partitions,
    nonnegativity_inequalities,
    simplex_inequalities,
)
from .conjectures import (
    ConjectureReport,
    check_conjecture,
    check_conjecture_1,
    check_conjecture_2,
    check_conjecture_3,
    check_conjecture_4,
    cycle_vector,
    lift_vector,
)
from .dd import (
    DDSnapshot,
    ExtremalityCertificate,
    FacetCertificate,
    IncidenceMatrix,
    brute_force_facets,
    brute_force_rays,
    facets_from_rays,
    incidence,
    is_extreme_ray,
    is_facet,
    rays_from_inequalities,
    slack_vector,
)
from .errors import (
    ExactnessError,
    GraphTooLarge,
    HemiconesError,
    InconsistentPair,
    InconsistentRelation,
    InfeasiblePoint,
    InvalidDimension,
    InvalidPartition,
    InvalidPermutation,
    InvalidTuple,
    MismatchedArity,
    NotFullDimensional,
    NotPointed,
    NotValidInequality,
    ParseError,
    ResourceLimitReached,
    SnapshotMismatch,
    WrongBlockCount,
    ZeroVector,
)
from .graphs import (
    FaceGraph,
    Graph,
    diameter,
    face_neighbors,
    identify_graph,
    isomorphic,
    local_graph,
    restrict_to_orbit,
    ridge,
    skeleton,
)
from .ioformats import (
    emit_dot,
    emit_rgraph_dot,
    format_ext,
    format_ine,
    format_orbit_table,
    format_summary_rows,
    json_report,
    read_ext,
    read_ine,
    write_ext,
    write_ine,
)
from .symmetry import (
    CoordinatePermutation,
    Orbit,
    OrbitDecomposition,
    OrbitTable,
    decompose_orbits,
    family_is_invariant,
    orbit_table,
    sym_generators,
    validate_double_counting,
)
from .tuples import TupleIndex, tuple_index
from .vectors import (
    HemiVector,
    Partition,
    RGraph,
    check_simplex,
    multicut_semimetric,
    partition_from_hemimetric,
    partition_hemimetric,
    r_graph,
    r_graph_is_clique_product,
)

__version__ = "0.1.0"

__all__ = [
    "ResultCache",
    "default_cache_dir",
    "ConeH",
    "ConeV",
    "LinearInequality",
    "build_cone_h",
    "build_cone_p",
    "classify_normal",
    "classify_ray",
    "enumerate_partitions",
    "nonnegativity_inequalities",
    "simplex_inequalities",
    "ConjectureReport",
    "check_conjecture",
    "check_conjecture_1",
    "check_conjecture_2",
    "check_conjecture_3",
    "check_conjecture_4",
    "cycle_vector",
    "lift_vector",
    "DDSnapshot",
    "ExtremalityCertificate",
    "FacetCertificate",
    "IncidenceMatrix",
    "brute_force_facets",
    "brute_force_rays",
    "facets_from_rays",
    "incidence",
    "is_extreme_ray",
    "is_facet",
    "rays_from_inequalities",
    "slack_vector",
    "ExactnessError",
    "GraphTooLarge",
    "HemiconesError",
    "InconsistentPair",
    "InconsistentRelation",
    "InfeasiblePoint",
    "InvalidDimension",
    "InvalidPartition",
    "InvalidPermutation",
    "InvalidTuple",
    "MismatchedArity",
    "NotFullDimensional",
    "NotPointed",
    "NotValidInequality",
    "ParseError",
    "ResourceLimitReached",
    "SnapshotMismatch",
    "WrongBlockCount",
    "ZeroVector",
    "FaceGraph",
    "Graph",
    "diameter",
    "face_neighbors",
    "identify_graph",
    "isomorphic",
    "local_graph",
    "restrict_to_orbit",
    "ridge",
    "skeleton",
    "emit_dot",
    "emit_rgraph_dot",
    "format_ext",
    "format_ine",
    "format_orbit_table",
    "format_summary_rows",
    "json_report",
    "read_ext",
    "read_ine",
    "write_ext",
    "write_ine",
    "CoordinatePermutation",
    "Orbit",
    "OrbitDecomposition",
    "OrbitTable",
    "decompose_orbits",
    "family_is_invariant",
    "orbit_table",
    "sym_generators",
    "validate_double_counting",
    "TupleIndex",
    "tuple_index",
    "HemiVector",
    "Partition",
    "RGraph",
    "check_simplex",
    "multicut_semimetric",
    "partition_from_hemimetric",
    "partition_hemimetric",
    "r_graph",
    "r_graph_is_clique_product",
    "__version__",
]
