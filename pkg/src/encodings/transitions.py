"""
Transition-based linearizations: arc-hybrid (ah_tb) and Covington (c_tb)

A gold oracle turns a tree into a transition sequence; the sequence is cut
into one label per token at every SHIFT (the read transition). Decoding
replays the concatenated labels through the system's state machine,
skipping any action that is invalid in the current configuration.
"""

import logging
from typing import List, Optional, Sequence, Union

from ..errors import LabelError, NotProjectiveError
from ..treebank import DepTree
from ..treebank.tree_algebra import is_projective
from .labels import (
    LEFT_ARC,
    NO_ARC,
    RIGHT_ARC,
    SHIFT,
    EncodedSentence,
    EncodingId,
    RepairStats,
    TransitionLabel,
)
from .repair import Decoded, repair_tree

logger = logging.getLogger(__name__)


# ==========================================
# STATE MACHINES
# ==========================================

class ArcHybridState:
    """Stack starting as [0], buffer [1..n]; the root is attached by RIGHT-ARC"""

    def __init__(self, n: int):
        self.n = n
        self.stack = [0]
        self.buffer_front = 1
        self.heads: List[Optional[int]] = [None] * (n + 1)

    @property
    def terminal(self) -> bool:
        return self.buffer_front > self.n and self.stack == [0]

    def apply(self, action: str) -> bool:
        """Apply an action; returns False (and changes nothing) if it is invalid here"""
        if action == SHIFT:
            if self.buffer_front > self.n:
                return False
            self.stack.append(self.buffer_front)
            self.buffer_front += 1
            return True
        if action == LEFT_ARC:
            if len(self.stack) < 2 or self.buffer_front > self.n:
                return False
            self.heads[self.stack.pop()] = self.buffer_front
            return True
        if action == RIGHT_ARC:
            if len(self.stack) < 2:
                return False
            dep = self.stack.pop()
            self.heads[dep] = self.stack[-1]
            return True
        return False


class CovingtonState:
    """Focus word j and a left pointer i that walks from j-1 down to 0"""

    def __init__(self, n: int):
        self.n = n
        self.focus = 0
        self.pointer = -1
        self.heads: List[Optional[int]] = [None] * (n + 1)

    def _creates_cycle(self, head: int, dep: int) -> bool:
        node: Optional[int] = head
        while node is not None and node != 0:
            if node == dep:
                return True
            node = self.heads[node]
        return False

    def apply(self, action: str) -> bool:
        """Apply an action; returns False (and changes nothing) if it is invalid here"""
        if action == SHIFT:
            if self.focus >= self.n:
                return False
            self.focus += 1
            self.pointer = self.focus - 1
            return True
        if self.focus < 1 or self.pointer < 0:
            return False
        i, j = self.pointer, self.focus
        if action == LEFT_ARC:
            if i < 1 or self.heads[i] is not None or self._creates_cycle(j, i):
                return False
            self.heads[i] = j
        elif action == RIGHT_ARC:
            if self.heads[j] is not None or self._creates_cycle(i, j):
                return False
            self.heads[j] = i
        elif action != NO_ARC:
            return False
        self.pointer -= 1
        return True


# ==========================================
# ORACLES
# ==========================================

def oracle_arc_hybrid(t: DepTree) -> List[str]:
    """
    Static arc-hybrid oracle

    Args:
        t: Projective tree

    Returns:
        Transition sequence that rebuilds exactly the gold arcs

    Raises:
        NotProjectiveError: The tree has crossing arcs
    """
    if not is_projective(t):
        raise NotProjectiveError()
    heads = (None,) + t.heads
    n = len(t)
    pending = [0] * (n + 1)
    for dep in range(1, n + 1):
        pending[heads[dep]] += 1

    state = ArcHybridState(n)
    sequence: List[str] = []
    while not state.terminal:
        stack = state.stack
        action = SHIFT
        if len(stack) > 1:
            top = stack[-1]
            if state.buffer_front <= n and heads[top] == state.buffer_front and pending[top] == 0:
                action = LEFT_ARC
            elif heads[top] == stack[-2] and pending[top] == 0:
                action = RIGHT_ARC
        if action != SHIFT:
            pending[heads[stack[-1]]] -= 1
        if not state.apply(action):
            raise NotProjectiveError()
        sequence.append(action)
    return sequence


def oracle_covington(t: DepTree) -> List[str]:
    """
    Covington oracle without trailing NO-ARCs

    For each focus j: SHIFT, then walk i = j-1 .. 0 emitting LEFT-ARC,
    RIGHT-ARC or NO-ARC, stopping at the leftmost word that still has an arc
    with j.

    Args:
        t: Any valid tree

    Returns:
        Transition sequence
    """
    heads = (None,) + t.heads
    n = len(t)
    sequence: List[str] = []
    for j in range(1, n + 1):
        sequence.append(SHIFT)
        partners = [i for i in range(1, j) if heads[i] == j]
        if heads[j] < j:
            partners.append(heads[j])
        if not partners:
            continue
        for i in range(j - 1, min(partners) - 1, -1):
            if i >= 1 and heads[i] == j:
                sequence.append(LEFT_ARC)
            elif heads[j] == i:
                sequence.append(RIGHT_ARC)
            else:
                sequence.append(NO_ARC)
    return sequence


# ==========================================
# LABELS <-> SEQUENCES
# ==========================================

def transitions_to_labels(sequence: Sequence[str], n: Optional[int] = None, read: str = SHIFT) -> List[TransitionLabel]:
    """
    Cut a transition sequence into one label per read transition

    Args:
        sequence: Transitions
        n: Expected number of tokens (checked when given)
        read: The read transition

    Returns:
        Labels whose concatenation is the input sequence
    """
    reads = sum(1 for action in sequence if action == read)
    if n is not None and reads != n:
        raise LabelError(f"expected {n} {read} transitions, found {reads}")
    if sequence and sequence[0] != read:
        raise LabelError(f"sequence must start with {read}, got {sequence[0]}")

    labels: List[List[str]] = []
    for action in sequence:
        if action == read:
            labels.append([action])
        else:
            labels[-1].append(action)
    return [TransitionLabel(tuple(actions)) for actions in labels]


def labels_to_transitions(labels: Sequence[TransitionLabel]) -> List[str]:
    return [action for label in labels for action in label.actions]


def encode_transitions(t: DepTree, system: Union[str, EncodingId]) -> EncodedSentence:
    """
    Encode a tree with the oracle of the named transition system

    Args:
        t: Valid tree (projective for arc-hybrid)
        system: EncodingId.ARC_HYBRID or EncodingId.COVINGTON

    Returns:
        EncodedSentence of TransitionLabel
    """
    system = EncodingId.parse(system)
    if system == EncodingId.ARC_HYBRID:
        sequence = oracle_arc_hybrid(t)
    elif system == EncodingId.COVINGTON:
        sequence = oracle_covington(t)
    else:
        raise LabelError(f"{system.value} is not a transition-based encoding")
    return EncodedSentence(system, tuple(transitions_to_labels(sequence, n=len(t))), t.deprels)


def decode_transitions(
    labels: Sequence[TransitionLabel],
    system: Union[str, EncodingId],
    deprels: Sequence[str],
    forms: Optional[Sequence[str]] = None,
    tags: Optional[Sequence[str]] = None
) -> Decoded:
    """
    Replay labels through the transition system and repair the result

    Args:
        labels: One TransitionLabel per token
        system: EncodingId.ARC_HYBRID or EncodingId.COVINGTON
        deprels: Relation per token
        forms: Optional forms for the output tree
        tags: Optional tags copied to the output tree (never consulted)

    Returns:
        Decoded(tree, repairs) with invalid actions counted as skipped
    """
    system = EncodingId.parse(system)
    n = len(labels)
    if system == EncodingId.ARC_HYBRID:
        state = ArcHybridState(n)
    elif system == EncodingId.COVINGTON:
        state = CovingtonState(n)
    else:
        raise LabelError(f"{system.value} is not a transition-based encoding")

    skipped = 0
    for action in labels_to_transitions(labels):
        if not state.apply(action):
            skipped += 1

    decoded = repair_tree(state.heads[1:], deprels, forms=forms, tags=tags)
    if skipped:
        logger.debug(f"{system.value} decode: skipped {skipped} invalid actions")
    return Decoded(decoded.tree, decoded.repairs + RepairStats(skipped_actions=skipped))
