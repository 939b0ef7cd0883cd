"""
Dependency tree linearizations for sequence-labeling parsing
"""

from .base import (
    ArcHybridEncoding,
    BaseEncoding,
    BracketEncoding,
    CovingtonEncoding,
    HeadSelectionEncoding,
    get_encoding,
    round_trip_rates,
)
from .brackets import UNENCODABLE, assign_planes, bracket_symbol_count, decode_2pb, encode_2pb, plane_counts
from .head_selection import decode_rph, encode_rph
from .label_io import LabeledSentence, format_label_file, labeled_to_treebank, parse_label_file, read_label_file
from .labels import (
    ROOT_TAG,
    BracketLabel,
    EncodedSentence,
    EncodingId,
    HeadSelLabel,
    RepairStats,
    TransitionLabel,
    parse_label,
)
from .repair import Decoded, repair_heads, repair_tree
from .transitions import (
    decode_transitions,
    encode_transitions,
    labels_to_transitions,
    oracle_arc_hybrid,
    oracle_covington,
    transitions_to_labels,
)

__all__ = [
    # Label types
    "EncodingId",
    "HeadSelLabel",
    "BracketLabel",
    "TransitionLabel",
    "EncodedSentence",
    "RepairStats",
    "ROOT_TAG",
    "parse_label",

    # Head selection
    "encode_rph",
    "decode_rph",

    # Brackets
    "UNENCODABLE",
    "assign_planes",
    "encode_2pb",
    "decode_2pb",
    "bracket_symbol_count",
    "plane_counts",

    # Transitions
    "oracle_arc_hybrid",
    "oracle_covington",
    "transitions_to_labels",
    "labels_to_transitions",
    "encode_transitions",
    "decode_transitions",

    # Repair
    "Decoded",
    "repair_heads",
    "repair_tree",

    # Encoding classes
    "BaseEncoding",
    "HeadSelectionEncoding",
    "BracketEncoding",
    "ArcHybridEncoding",
    "CovingtonEncoding",
    "get_encoding",
    "round_trip_rates",

    # Label files
    "LabeledSentence",
    "format_label_file",
    "parse_label_file",
    "read_label_file",
    "labeled_to_treebank",
]
