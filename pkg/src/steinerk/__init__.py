"""Exact Steiner distances and Steiner k-diameters on small graphs, with
Cartesian and lexicographic product constructions, closed-form bounds,
witness-tree builders, and a seeded verification harness."""

from .bounds import (
    BoundPair,
    build_cartesian_tree,
    build_lexicographic_tree,
    cartesian_distance_bounds,
    cartesian_sdiam_bounds,
    drop3_parameter,
    lex_distance_closed_form,
    lex_distance_k3,
    lex_sdiam_bounds,
    sdiam3_lex_closed_form,
)
from .config import GuardExceeded, dp_limit, oracle_guard, spectrum_limit
from .families import FamilySpec, generate
from .graphs import (
    INFINITE,
    Graph,
    all_pairs_distances,
    bfs_distances,
    diameter,
    distance,
    from_json,
    induced_subgraph,
    is_connected,
    to_json,
    vertex_connectivity,
)
from .products import (
    ProductGraph,
    ProductVertex,
    as_pairs,
    cartesian_product,
    lexicographic_product,
    project,
)
from .sdiam import (
    SdiamResult,
    steiner_eccentricity,
    steiner_k_diameter,
    steiner_k_radius,
)
from .steiner import (
    SteinerResult,
    steiner_distance,
    steiner_distance_oracle,
    support,
)
from .verify import (
    BoundReport,
    CorpusSpec,
    TableRow,
    closed_form_table,
    reports_to_csv,
    reports_to_json,
    table_to_csv,
    table_to_json,
    theorem_ids,
    verify_theorem,
)

__all__ = [
    "BoundPair",
    "BoundReport",
    "CorpusSpec",
    "FamilySpec",
    "Graph",
    "GuardExceeded",
    "INFINITE",
    "ProductGraph",
    "ProductVertex",
    "SdiamResult",
    "SteinerResult",
    "TableRow",
    "all_pairs_distances",
    "as_pairs",
    "bfs_distances",
    "build_cartesian_tree",
    "build_lexicographic_tree",
    "cartesian_distance_bounds",
    "cartesian_product",
    "cartesian_sdiam_bounds",
    "closed_form_table",
    "diameter",
    "distance",
    "dp_limit",
    "drop3_parameter",
    "from_json",
    "generate",
    "induced_subgraph",
    "is_connected",
    "lex_distance_closed_form",
    "lex_distance_k3",
    "lex_sdiam_bounds",
    "lexicographic_product",
    "oracle_guard",
    "project",
    "reports_to_csv",
    "reports_to_json",
    "sdiam3_lex_closed_form",
    "spectrum_limit",
    "steiner_distance",
    "steiner_distance_oracle",
    "steiner_eccentricity",
    "steiner_k_diameter",
    "steiner_k_radius",
    "support",
    "table_to_csv",
    "table_to_json",
    "theorem_ids",
    "to_json",
    "vertex_connectivity",
    "verify_theorem",
]

__version__ = "1.0.0"
