"""
Attachment scores (UAS / LAS)

Every syntactic word counts, punctuation included. Multiword-token ranges
and empty nodes carry no head and are never scored. Relation labels are
compared on their universal part, subtypes after ':' ignored.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..encodings import RepairStats
from ..errors import AlignmentError
from ..treebank import DepTree, Treebank

logger = logging.getLogger(__name__)


def universal_deprel(deprel: str) -> str:
    return deprel.split(":", 1)[0]


@dataclass(frozen=True)
class EvalResult:
    """Attachment counts; scores are derived so results merge by addition"""

    tokens: int = 0
    correct_heads: int = 0
    correct_labeled: int = 0
    repairs: RepairStats = field(default_factory=RepairStats)

    @property
    def uas(self) -> float:
        return self.correct_heads / self.tokens if self.tokens else 0.0

    @property
    def las(self) -> float:
        return self.correct_labeled / self.tokens if self.tokens else 0.0

    def merge(self, other: "EvalResult") -> "EvalResult":
        return EvalResult(
            tokens=self.tokens + other.tokens,
            correct_heads=self.correct_heads + other.correct_heads,
            correct_labeled=self.correct_labeled + other.correct_labeled,
            repairs=self.repairs + other.repairs,
        )

    def to_line(self) -> str:
        return f"UAS={self.uas:.4f} LAS={self.las:.4f} n={self.tokens} repairs={self.repairs.total}"

    def to_dict(self) -> dict:
        return {
            "uas": self.uas,
            "las": self.las,
            "n": self.tokens,
            "repairs": self.repairs.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def sentence_scores(gold: DepTree, predicted: DepTree, sentence_index: Optional[int] = None) -> EvalResult:
    if len(gold) != len(predicted):
        where = f"sentence {sentence_index}: " if sentence_index is not None else ""
        raise AlignmentError(f"{where}{len(predicted)} predicted tokens for {len(gold)} gold tokens")
    correct_heads = correct_labeled = 0
    for g, p in zip(gold.tokens, predicted.tokens):
        if g.head == p.head:
            correct_heads += 1
            if universal_deprel(g.deprel) == universal_deprel(p.deprel):
                correct_labeled += 1
    return EvalResult(tokens=len(gold), correct_heads=correct_heads, correct_labeled=correct_labeled)


def merge_results(results: Iterable[EvalResult]) -> EvalResult:
    total = EvalResult()
    for result in results:
        total = total.merge(result)
    return total


def attachment_scores(gold: Treebank, predicted: Treebank, repairs: Optional[RepairStats] = None) -> EvalResult:
    """
    Score a predicted treebank against gold

    Args:
        gold: Reference treebank
        predicted: Treebank aligned sentence by sentence and token by token
        repairs: Decoder repair statistics to attach to the result

    Returns:
        EvalResult (scores 0.0 when there are no tokens)

    Raises:
        AlignmentError: Sentence or token counts differ
    """
    if len(gold) != len(predicted):
        raise AlignmentError(f"{len(predicted)} predicted sentences for {len(gold)} gold sentences")
    result = merge_results(
        sentence_scores(g, p, sentence_index=i) for i, (g, p) in enumerate(zip(gold, predicted))
    )
    if repairs is not None:
        result = result.merge(EvalResult(repairs=repairs))
    logger.debug(f"{predicted.name} vs {gold.name}: {result.to_line()}")
    return result
