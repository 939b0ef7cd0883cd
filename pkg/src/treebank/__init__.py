"""
CoNLL-U treebank model, I/O and tree algebra
"""

from .conllu import (
    DepTree,
    SentenceIssue,
    Token,
    Treebank,
    parse_conllu,
    read_conllu,
    write_conllu,
    write_conllu_file,
)
from .splits import resplit, split_sizes
from .tree_algebra import (
    CrossingPair,
    TreebankStats,
    arcs_cross,
    check_heads,
    crossing_arc_pairs,
    is_projective,
    projectivize,
    resource_group,
    treebank_stats,
    validate_tree,
)

__all__ = [
    # Model and I/O
    "Token",
    "DepTree",
    "Treebank",
    "SentenceIssue",
    "parse_conllu",
    "write_conllu",
    "read_conllu",
    "write_conllu_file",

    # Tree algebra
    "CrossingPair",
    "arcs_cross",
    "check_heads",
    "crossing_arc_pairs",
    "is_projective",
    "projectivize",
    "validate_tree",

    # Splits and statistics
    "resplit",
    "split_sizes",
    "TreebankStats",
    "resource_group",
    "treebank_stats",
]
