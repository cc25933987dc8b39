"""Free bases of finite-index subgroups of finitely generated free groups."""

from .covering import (
    Covering,
    FoldedGraph,
    LabeledGraph,
    covering_from_hom,
    coverings_isomorphic,
    fold,
    fold_words,
    is_connected_covering,
    is_member,
    random_covering,
    schreier_graph,
    trace,
)
from .errors import (
    AlphabetMismatch,
    BadElementIndex,
    DomainError,
    FreeGroupError,
    InfiniteIndex,
    InvalidLetter,
    InvalidPermutation,
    NoCrossingEdge,
    NotConnected,
    NotMember,
    WordSyntaxError,
)
from .graphs import (
    Graph,
    SpanningTree,
    connected_components,
    euler_rank,
    find_crossing_edge,
    is_connected,
    spanning_tree,
    tree_path,
)
from .schreier import (
    Basis,
    eval_basis,
    freeness_check,
    rank_formula,
    rewrite_in_basis,
    subgroup_basis,
)
from .words import (
    Alphabet,
    FiniteGroup,
    Letter,
    Word,
    enumerate_reduced,
    equal,
    eval_in_group,
    format_word,
    hom_apply,
    invert,
    multiply,
    parse_word,
    random_word,
    reduce,
)

__version__ = "0.1.0"
