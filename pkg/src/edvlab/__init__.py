"""Edge division vectors of trees: EDV classes, branch transformations,
family theorems and edge-additive topological indices."""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .canon import CanonicalCode, RootedCode, are_similar, canonical_code, is_isomorphic, rooted_code
from .classify import Census, EDVClass, census, classify, is_dedv, problem1_report
from .edv import EdgeDivisionVector, OrderRelation, compare, compare_trees, edv, suffix_sums
from .enumerate import all_trees, count_trees
from .errors import EdvlabError
from .families import predict_dedv
from .indices import IndexSpec, IndexValue, all_indices, index, index_from_edv
from .transforms import (
    BalancedPair,
    BranchMove,
    ExchangeCertificate,
    branch_exchange,
    branch_move,
    exchange_certificate,
    exchange_closure,
    find_balanced_pairs,
    predict_branch_move,
    theorem_5_1_construct,
)
from .tree import Edge, RootedTree, SplitSizes, Tree, mu, split_sizes

__all__ = [
    "BACKEND",
    "BalancedPair",
    "BranchMove",
    "CanonicalCode",
    "Census",
    "EDVClass",
    "Edge",
    "EdgeDivisionVector",
    "EdvlabError",
    "ExchangeCertificate",
    "IndexSpec",
    "IndexValue",
    "OrderRelation",
    "RootedCode",
    "RootedTree",
    "SplitSizes",
    "Tree",
    "all_indices",
    "all_trees",
    "are_similar",
    "branch_exchange",
    "branch_move",
    "canonical_code",
    "census",
    "classify",
    "compare",
    "compare_trees",
    "count_trees",
    "edv",
    "exchange_certificate",
    "exchange_closure",
    "find_balanced_pairs",
    "index",
    "index_from_edv",
    "is_dedv",
    "is_isomorphic",
    "mu",
    "predict_branch_move",
    "predict_dedv",
    "problem1_report",
    "rooted_code",
    "split_sizes",
    "suffix_sums",
    "theorem_5_1_construct",
]
