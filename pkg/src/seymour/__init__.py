"""Decomposition of binary linear codes and its decoding applications.

Core objects: bit-packed GF(2) matrices and immutable linear codes
(codes), separations and connectivity (connectivity), the 2-/3-/3-bar
sums with their inverse decompositions (sums), decomposition trees
(dectree), graphs and the T-join solver behind graphic ML decoding
(graphs), the recursive tree decoder and minimum distance (mldecode),
code equivalence and excluded-minor classification (classify), and
exact-rational LP decoding over the fundamental polytope (lpgeom).
"""

__version__ = "0.1.0"

from .codes import (
    Codeword,
    LinearCode,
    direct_sum,
    equal,
    load_code,
    min_weight_bruteforce,
    minimal_codewords,
    save_code,
    weight_enumerator,
)
from .connectivity import (
    Separation,
    StateProfile,
    connectivity_lambda,
    defect,
    find_k_separation,
    is_internally_4connected,
    minor_split,
    state_profile,
)
from .sums import (
    DecompResult,
    SumKind,
    decompose_three_bar_sum,
    decompose_three_sum,
    decompose_two_sum,
    sum_m,
    three_bar_sum,
    three_sum,
    two_sum,
)
from .dectree import (
    DecompNode,
    build_complete_tree,
    is_unary,
    leaves,
    recompose,
    tree_from_json,
    tree_to_json,
    validate,
)
from .graphs import (
    EdgeSet,
    Graph,
    code_from_graph,
    girth_stats,
    graphic_linmin,
    load_graph,
    min_eulerian_subgraph,
    realize_graph,
    t_join,
)
from .mldecode import (
    Channel,
    DecodeContext,
    cost_from_channel,
    linmin_bruteforce,
    linmin_tree,
    min_distance,
)
from .classify import ClassReport, classify_code, equivalent, has_minor
from .catalog import catalog_code, load_catalog
from .lpgeom import (
    HuntResult,
    LPVertex,
    PolytopeLP,
    build_fundamental_polytope,
    full_dual_words,
    hunt_pseudocodeword,
    lp_decode,
    lp_minimize,
)
from .errors import ContractError, InputBoundError, SeymourError

__all__ = [name for name in dir() if not name.startswith("_")]
