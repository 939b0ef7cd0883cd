"""
Relative PoS-based head selection (rp_h)

Token i with head h gets (+k, tag(h)) when h is the k-th token right of i
tagged tag(h), or (-k, tag(h)) symmetrically to the left. The artificial
root is a virtual leftmost position tagged ROOT, so root arcs read (-1, ROOT).
"""

import logging
from typing import List, Optional, Sequence

from ..errors import AlignmentError
from ..treebank import DepTree
from .labels import ROOT_TAG, EncodedSentence, EncodingId, HeadSelLabel, RepairStats
from .repair import Decoded, repair_tree

logger = logging.getLogger(__name__)


def encode_rph(t: DepTree) -> EncodedSentence:
    """
    Encode a tree as relative PoS-based head-selection labels

    Args:
        t: Valid tree; its UPOS tags are the word property

    Returns:
        EncodedSentence of HeadSelLabel
    """
    tags = t.tags
    labels: List[HeadSelLabel] = []
    for i, head in enumerate(t.heads, start=1):
        if head == 0:
            labels.append(HeadSelLabel(-1, ROOT_TAG))
            continue
        tag = tags[head - 1]
        if head > i:
            rank = sum(1 for j in range(i + 1, head + 1) if tags[j - 1] == tag)
            labels.append(HeadSelLabel(rank, tag))
        else:
            rank = sum(1 for j in range(head, i) if tags[j - 1] == tag)
            labels.append(HeadSelLabel(-rank, tag))
    return EncodedSentence(EncodingId.HEAD_SELECTION, tuple(labels), t.deprels)


def decode_rph(
    labels: Sequence[HeadSelLabel],
    tags: Sequence[str],
    deprels: Sequence[str],
    forms: Optional[Sequence[str]] = None
) -> Decoded:
    """
    Decode head-selection labels against the provided (possibly noisy) tags

    When fewer than |offset| matching words exist in the offset's direction
    the head is clamped to the farthest match; with no match it is the root.
    Both cases count as fallbacks.

    Args:
        labels: One HeadSelLabel per token
        tags: Tag sequence used to resolve the property, never the gold one
        deprels: Relation per token
        forms: Optional forms for the output tree

    Returns:
        Decoded(tree, repairs); output tree carries the provided tags
    """
    if len(labels) != len(tags):
        raise AlignmentError(f"{len(labels)} labels for {len(tags)} tags")

    n = len(labels)
    heads: List[Optional[int]] = []
    fallbacks = 0
    for i, label in enumerate(labels, start=1):
        if label.tag == ROOT_TAG and label.offset < 0:
            heads.append(0)
            continue
        if label.offset > 0:
            candidates = [j for j in range(i + 1, n + 1) if tags[j - 1] == label.tag]
        else:
            candidates = [j for j in range(i - 1, 0, -1) if tags[j - 1] == label.tag]
        wanted = abs(label.offset)
        if len(candidates) >= wanted:
            heads.append(candidates[wanted - 1])
        elif candidates:
            heads.append(candidates[-1])
            fallbacks += 1
        else:
            heads.append(0)
            fallbacks += 1

    decoded = repair_tree(heads, deprels, forms=forms, tags=tags)
    if fallbacks:
        logger.debug(f"rp_h decode: {fallbacks} labels clamped")
    return Decoded(decoded.tree, decoded.repairs + RepairStats(fallbacks=fallbacks))
