"""
Deterministic repair of decoded head assignments into valid trees
"""

from typing import List, NamedTuple, Optional, Sequence, Tuple

from ..treebank import DepTree
from ..treebank.tree_algebra import check_heads
from .labels import RepairStats


class Decoded(NamedTuple):
    """A decoder's output tree with what it took to make it valid"""

    tree: DepTree
    repairs: RepairStats


def repair_heads(partial_heads: Sequence[Optional[int]]) -> Tuple[List[int], RepairStats]:
    """
    Turn a partial head assignment into a tree rooted at 0

    Headless tokens (None, out of range or self-attached) go to the root;
    each cycle is broken by attaching its smallest-index member to the root.

    Args:
        partial_heads: One entry per token, None where no head was decoded

    Returns:
        (heads, repair statistics)
    """
    n = len(partial_heads)
    heads = []
    headless = 0
    for i, head in enumerate(partial_heads, start=1):
        if head is None or head < 0 or head > n or head == i:
            heads.append(0)
            headless += 1
        else:
            heads.append(int(head))

    cycles = 0
    while True:
        problem = check_heads(heads)
        if problem is None:
            break
        # check_heads reports the smallest member of the first cycle it meets
        heads[problem[0] - 1] = 0
        cycles += 1

    return heads, RepairStats(headless=headless, cycles_broken=cycles)


def repair_tree(
    partial_heads: Sequence[Optional[int]],
    deprels: Sequence[str],
    forms: Optional[Sequence[str]] = None,
    tags: Optional[Sequence[str]] = None
) -> Decoded:
    """
    Repair heads and build the resulting DepTree

    Args:
        partial_heads: One entry per token, None where no head was decoded
        deprels: Relation per token
        forms: Optional forms for the output tree
        tags: Optional UPOS tags for the output tree

    Returns:
        Decoded(tree, repairs); the tree always validates
    """
    heads, repairs = repair_heads(partial_heads)
    return Decoded(DepTree.from_heads(heads, deprels=deprels, forms=forms, tags=tags), repairs)
