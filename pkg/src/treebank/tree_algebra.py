"""
Tree algebra over head assignments: validation, crossings, projectivity

Functions accept either a DepTree or a plain sequence of heads where
heads[i - 1] is the head of token i and 0 is the artificial root.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..errors import TreeValidationError

if TYPE_CHECKING:
    from .conllu import DepTree, Treebank

HeadsLike = Union["DepTree", Sequence[int]]
Arc = Tuple[int, int]


def _heads_of(t: HeadsLike) -> Tuple[int, ...]:
    heads = getattr(t, "heads", t)
    return tuple(heads)


def check_heads(heads: Sequence[int]) -> Optional[Tuple[int, str]]:
    """
    Check that a head assignment is a tree rooted at 0

    Args:
        heads: One head per token

    Returns:
        None if valid, else (token index, message) for the first problem
    """
    n = len(heads)
    for i, head in enumerate(heads, start=1):
        if head < 0 or head > n:
            return i, "head out of range"
        if head == i:
            return i, "token is its own head"

    # 0 = unvisited, 1 = on current path, 2 = reaches root
    state = [0] * (n + 1)
    state[0] = 2
    for start in range(1, n + 1):
        path = []
        node = start
        while state[node] == 0:
            state[node] = 1
            path.append(node)
            node = heads[node - 1]
        if state[node] == 1:
            return min(path[path.index(node):]), "cycle"
        for visited in path:
            state[visited] = 2
    return None


def validate_tree(heads: HeadsLike, sentence_index: Optional[int] = None):
    """Raise TreeValidationError when heads do not form a tree rooted at 0"""
    problem = check_heads(_heads_of(heads))
    if problem is not None:
        token_index, message = problem
        raise TreeValidationError(message, sentence_index=sentence_index, token_index=token_index)


def arcs(t: HeadsLike, include_root: bool = True) -> List[Arc]:
    """(head, dependent) pairs in dependent order"""
    return [
        (head, dep) for dep, head in enumerate(_heads_of(t), start=1)
        if include_root or head != 0
    ]


def arcs_cross(a: Arc, b: Arc) -> bool:
    """True iff exactly one endpoint of one arc lies strictly inside the other"""
    l1, r1 = sorted(a)
    l2, r2 = sorted(b)
    return l1 < l2 < r1 < r2 or l2 < l1 < r2 < r1


def is_right_arc(arc: Arc) -> bool:
    head, dep = arc
    return head < dep


class CrossingPair(NamedTuple):
    """Two crossing arcs, each written as (head, dependent)"""

    first: Arc
    second: Arc
    same_direction: bool

    @property
    def direction(self) -> str:
        return "same" if self.same_direction else "opposite"


def iter_crossing_pairs(t: HeadsLike) -> Iterator[CrossingPair]:
    all_arcs = arcs(t)
    for i, a in enumerate(all_arcs):
        for b in all_arcs[i + 1:]:
            if arcs_cross(a, b):
                yield CrossingPair(a, b, is_right_arc(a) == is_right_arc(b))


def crossing_arc_pairs(t: HeadsLike) -> List[CrossingPair]:
    """
    Every pair of crossing arcs, root arcs included

    Args:
        t: Tree or heads

    Returns:
        Pairs ordered by the dependent of the first arc, then of the second
    """
    return list(iter_crossing_pairs(t))


def is_projective(t: HeadsLike) -> bool:
    """True iff no two arcs (root arcs included) cross"""
    return next(iter_crossing_pairs(t), None) is None


def _dominates(heads: Sequence[int], ancestor: int, node: int) -> bool:
    while node != 0:
        if node == ancestor:
            return True
        node = heads[node - 1]
    return ancestor == 0


def _arc_is_projective(heads: Sequence[int], head: int, dep: int) -> bool:
    left, right = sorted((head, dep))
    return all(_dominates(heads, head, k) for k in range(left + 1, right))


def projectivize(t: HeadsLike) -> List[int]:
    """
    Lift arcs until the tree is projective

    The shortest non-projective arc (ties: leftmost dependent) is reattached
    to its head's head, repeatedly.

    Args:
        t: Tree or heads

    Returns:
        Projective heads; unchanged if the input is already projective
    """
    heads = list(_heads_of(t))
    while True:
        offending = [
            (abs(head - dep), dep)
            for dep, head in enumerate(heads, start=1)
            if not _arc_is_projective(heads, head, dep)
        ]
        if not offending:
            return heads
        _, dep = min(offending)
        heads[dep - 1] = heads[heads[dep - 1] - 1]


# ==========================================
# TREEBANK STATISTICS
# ==========================================

RESOURCE_GROUPS = ((1000, "low"), (5000, "mid"), (15000, "high"))


def resource_group(n_trees: int) -> str:
    """Size class of a treebank by its number of trees"""
    for limit, group in RESOURCE_GROUPS:
        if n_trees < limit:
            return group
    return "very-high"


@dataclass(frozen=True)
class TreebankStats:
    name: str
    trees: int
    tokens: int
    resource_group: str
    projective_trees: int
    same_direction_crossings: int
    opposite_direction_crossings: int

    @property
    def projective_ratio(self) -> float:
        return self.projective_trees / self.trees if self.trees else 1.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "trees": self.trees,
            "tokens": self.tokens,
            "resource_group": self.resource_group,
            "projective_trees": self.projective_trees,
            "projective_ratio": round(self.projective_ratio, 6),
            "same_direction_crossings": self.same_direction_crossings,
            "opposite_direction_crossings": self.opposite_direction_crossings,
        }


def treebank_stats(tb: "Treebank") -> TreebankStats:
    """
    Size and crossing statistics of a treebank

    Args:
        tb: Treebank to describe

    Returns:
        TreebankStats
    """
    projective = same = opposite = 0
    for sentence in tb:
        pairs = crossing_arc_pairs(sentence)
        if not pairs:
            projective += 1
        for pair in pairs:
            if pair.same_direction:
                same += 1
            else:
                opposite += 1
    return TreebankStats(
        name=tb.name,
        trees=len(tb),
        tokens=tb.n_tokens,
        resource_group=resource_group(len(tb)),
        projective_trees=projective,
        same_direction_crossings=same,
        opposite_direction_crossings=opposite,
    )
