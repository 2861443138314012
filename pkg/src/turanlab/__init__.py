"""turanlab: constructions, exact search, and claim verification for
Turan-type extremal graph problems with forbidden (induced) subgraphs."""

from turanlab.bounds import (
    BoundFormula,
    alpha,
    asymptotic_bound,
    ltt_bound_principal,
    pentagon_family_lower,
    pentagon_family_upper,
)
from turanlab.constructions import (
    ConstructionCertificate,
    ConstructionError,
    bipartite_k2t_extremal,
    bollobas_gyori_double,
    furedi_k2t_graph,
    projective_plane_incidence,
)
from turanlab.core import (
    BipartiteGraph,
    GraphError,
    SimpleGraph,
    bipartite_double_cover,
    degree_stats,
    induced_subgraph,
    min_degree_peel,
    neighborhood_layers,
)
from turanlab.graph6 import (
    Graph6Error,
    graph6_decode,
    graph6_encode,
    read_graph6_file,
    write_graph6_file,
)
from turanlab.patterns import (
    FamilyParseError,
    FamilySpec,
    ForbiddenPattern,
    PatternError,
    Witness,
    contains_cycle_of_length,
    contains_induced_kst,
    contains_kst,
    count_triangles,
    is_family_free,
    max_codegree_nonadjacent,
    parse_family,
)
from turanlab.search import (
    ExtremalRecord,
    SearchBudget,
    SearchError,
    branch_and_bound_ex,
    brute_force_ex,
    extremal_table,
)
from turanlab.verify import (
    ClaimReport,
    VerifyError,
    blakley_roy_check,
    classify_3_walks_from_vertex,
    count_3_walks,
    erdos_gallai_path_check,
    good_3path_stats,
    gyori_li_triangle_report,
    limited_cherries_check,
    max_good_3path_edge,
    n2_edge_bound_check,
    triangle_edge_decomposition,
)

__version__ = "0.1.0"
