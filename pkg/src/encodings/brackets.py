"""
2-planar bracketing (2p_b)

Each non-root arc becomes a bracket pair on one of two planes:
  left arc  (d < h):  '<' on d, '\\' on h
  right arc (h < d):  '/' on h, '>' on d
Per token and plane the symbols are written '>? \\* <? /*'; plane-2
symbols carry a '*'. Root arcs are not bracketed.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..treebank import DepTree
from ..treebank.tree_algebra import Arc, arcs, arcs_cross
from .labels import (
    LEFT_CLOSE,
    LEFT_OPEN,
    RIGHT_CLOSE,
    RIGHT_OPEN,
    BracketLabel,
    EncodedSentence,
    EncodingId,
    RepairStats,
)
from .repair import Decoded, repair_tree

logger = logging.getLogger(__name__)

UNENCODABLE = 0
PLANES = (1, 2)


def assign_planes(t: DepTree) -> Dict[Arc, int]:
    """
    Greedy two-plane assignment of the non-root arcs

    Arcs are visited by left endpoint, shorter arcs first on ties. An arc goes
    on plane 1 unless it crosses an arc already there, then plane 2 under the
    same rule, otherwise it is marked UNENCODABLE.

    Args:
        t: Valid tree

    Returns:
        Mapping (head, dependent) -> 1, 2 or UNENCODABLE
    """
    ordered = sorted(arcs(t, include_root=False), key=lambda a: (min(a), abs(a[0] - a[1])))
    assigned: Dict[int, List[Arc]] = {plane: [] for plane in PLANES}
    planes: Dict[Arc, int] = {}
    for arc in ordered:
        planes[arc] = UNENCODABLE
        for plane in PLANES:
            if not any(arcs_cross(arc, other) for other in assigned[plane]):
                assigned[plane].append(arc)
                planes[arc] = plane
                break
    return planes


def encode_2pb(t: DepTree) -> EncodedSentence:
    """
    Encode a tree as 2-planar bracket labels

    Args:
        t: Valid tree

    Returns:
        EncodedSentence of BracketLabel; arcs that fit on neither plane are
        dropped and counted in unencodable_arcs
    """
    n = len(t)
    # counts[token][plane] = [>, \, <, /]
    counts = [{plane: [0, 0, 0, 0] for plane in PLANES} for _ in range(n + 1)]
    unencodable = 0
    for (head, dep), plane in assign_planes(t).items():
        if plane == UNENCODABLE:
            unencodable += 1
            continue
        if dep < head:
            counts[dep][plane][2] += 1
            counts[head][plane][1] += 1
        else:
            counts[head][plane][3] += 1
            counts[dep][plane][0] += 1

    labels = tuple(
        BracketLabel.from_counts((tuple(counts[i][1]), tuple(counts[i][2])))
        for i in range(1, n + 1)
    )
    if unencodable:
        logger.debug(f"2p_b encode: {unencodable} arcs fit on neither plane")
    return EncodedSentence(EncodingId.BRACKETS_2P, labels, t.deprels, unencodable_arcs=unencodable)


def decode_2pb(
    labels: Sequence[BracketLabel],
    deprels: Sequence[str],
    forms: Optional[Sequence[str]] = None,
    tags: Optional[Sequence[str]] = None
) -> Decoded:
    """
    Decode bracket labels with one right-arc and one left-arc matcher per plane

    '>' pairs with the most recent unmatched '/', '\\' with the most recent
    unmatched '<'. Unmatched symbols and arcs that would give a token a
    second head are discarded. Tags are never consulted.

    Args:
        labels: One BracketLabel per token
        deprels: Relation per token
        forms: Optional forms for the output tree
        tags: Optional tags copied to the output tree

    Returns:
        Decoded(tree, repairs)
    """
    n = len(labels)
    heads: List[Optional[int]] = [None] * n
    discarded = 0

    def attach(head: int, dep: int) -> bool:
        if heads[dep - 1] is not None:
            return False
        heads[dep - 1] = head
        return True

    for plane in PLANES:
        right_open: List[int] = []
        left_open: List[int] = []
        for k, label in enumerate(labels, start=1):
            for symbol in label.symbols(plane):
                if symbol == RIGHT_CLOSE:
                    if right_open and attach(right_open.pop(), k):
                        continue
                    discarded += 1
                elif symbol == LEFT_CLOSE:
                    if left_open and attach(k, left_open.pop()):
                        continue
                    discarded += 1
                elif symbol == LEFT_OPEN:
                    left_open.append(k)
                else:
                    right_open.append(k)
        discarded += len(right_open) + len(left_open)

    decoded = repair_tree(heads, deprels, forms=forms, tags=tags)
    return Decoded(decoded.tree, decoded.repairs + RepairStats(discarded_brackets=discarded))


def bracket_symbol_count(encoded: EncodedSentence) -> int:
    """Total symbols over a sentence; twice the number of encoded arcs"""
    return sum(label.n_symbols for label in encoded.labels)


def plane_counts(t: DepTree) -> Tuple[int, int, int]:
    """(plane-1 arcs, plane-2 arcs, unencodable arcs)"""
    values = list(assign_planes(t).values())
    return values.count(1), values.count(2), values.count(UNENCODABLE)
