"""
Per-tag error model estimated from a tagger's mistakes

  p(error | t)    = E_t / C_t
  p(e | t, error) = E_{t->e} / E_t
"""

import json
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union

from ..errors import AlignmentError, DataError
from ..treebank import Treebank

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1

Position = Tuple[int, int]


@dataclass(frozen=True)
class ErrorModel:
    """
    Counts collected from aligned (gold, predicted) tags

    real_error_positions are (sentence index, token index) pairs, token
    indices 1-based as in CoNLL-U, of the calibration split.
    """

    counts: Dict[str, int]
    errors: Dict[str, int]
    confusion: Dict[str, Dict[str, int]]
    real_error_positions: FrozenSet[Position] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "real_error_positions", frozenset(self.real_error_positions))
        for tag, count in self.counts.items():
            errors = self.errors.get(tag, 0)
            if not 0 <= errors <= count:
                raise DataError(f"tag {tag}: error count {errors} outside [0, {count}]")
            if sum(self.confusion.get(tag, {}).values()) != errors:
                raise DataError(f"tag {tag}: confusion counts do not sum to {errors}")
        if len(self.real_error_positions) != self.total_errors:
            raise DataError(
                f"{len(self.real_error_positions)} real-error positions for {self.total_errors} errors"
            )

    @property
    def total_errors(self) -> int:
        return sum(self.errors.values())

    @property
    def total_tokens(self) -> int:
        return sum(self.counts.values())

    @property
    def tags(self) -> List[str]:
        return sorted(self.counts)

    @property
    def accuracy(self) -> float:
        return 1.0 - self.total_errors / self.total_tokens if self.total_tokens else 1.0

    def p_error(self, tag: str) -> float:
        count = self.counts.get(tag, 0)
        return self.errors.get(tag, 0) / count if count else 0.0

    def error_distribution(self, tag: str) -> Dict[str, float]:
        """p(e | tag, error) over erroneous tags, sorted by tag"""
        errors = self.errors.get(tag, 0)
        if not errors:
            return {}
        return {wrong: n / errors for wrong, n in sorted(self.confusion[tag].items())}

    # ==========================================
    # SERIALIZATION
    # ==========================================

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "counts": dict(sorted(self.counts.items())),
            "errors": dict(sorted(self.errors.items())),
            "confusion": {t: dict(sorted(c.items())) for t, c in sorted(self.confusion.items())},
            "real_error_positions": [list(p) for p in sorted(self.real_error_positions)],
            "totals": {"tokens": self.total_tokens, "errors": self.total_errors},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ErrorModel":
        if data.get("format") != FORMAT_VERSION:
            raise DataError(f"unsupported error model format {data.get('format')!r}")
        model = cls(
            counts={t: int(n) for t, n in data["counts"].items()},
            errors={t: int(n) for t, n in data["errors"].items()},
            confusion={t: {e: int(n) for e, n in c.items()} for t, c in data["confusion"].items()},
            real_error_positions=frozenset((int(s), int(i)) for s, i in data.get("real_error_positions", [])),
        )
        totals = data.get("totals", {})
        if totals and (totals.get("tokens") != model.total_tokens or totals.get("errors") != model.total_errors):
            raise DataError("error model totals do not match its counts")
        return model

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "ErrorModel":
        try:
            return cls.from_dict(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as e:
            raise DataError(f"invalid error model document: {e}") from None

    def save(self, path: Path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.to_json())
        logger.info(f"Saved error model ({self.total_errors}/{self.total_tokens} errors) to {path}")

    @classmethod
    def load(cls, path: Path) -> "ErrorModel":
        with open(path, 'r', encoding='utf-8') as f:
            return cls.from_json(f.read())


def fit_error_model(gold: Treebank, predicted: Union[Treebank, Sequence[Sequence[str]]]) -> ErrorModel:
    """
    Count per-tag totals, errors and confusions

    Args:
        gold: Gold-tagged treebank
        predicted: Predicted tags, one sequence per sentence, or a treebank

    Returns:
        ErrorModel
    """
    predicted_tags = predicted.tags() if isinstance(predicted, Treebank) else predicted
    if len(predicted_tags) != len(gold):
        raise AlignmentError(f"{len(predicted_tags)} predicted sentences for {len(gold)} gold sentences")

    counts: Counter = Counter()
    errors: Counter = Counter()
    confusion: Dict[str, Counter] = defaultdict(Counter)
    positions = set()
    for s, (sentence, tags) in enumerate(zip(gold, predicted_tags)):
        if len(tags) != len(sentence):
            raise AlignmentError(f"sentence {s}: {len(tags)} predicted tags for {len(sentence)} tokens")
        for token, tag in zip(sentence.tokens, tags):
            counts[token.upos] += 1
            if tag != token.upos:
                errors[token.upos] += 1
                confusion[token.upos][tag] += 1
                positions.add((s, token.index))

    model = ErrorModel(
        counts=dict(counts),
        errors={t: errors.get(t, 0) for t in counts},
        confusion={t: dict(c) for t, c in confusion.items()},
        real_error_positions=frozenset(positions),
    )
    logger.info(
        f"Fitted error model on {gold.name}: {model.total_errors}/{model.total_tokens} errors "
        f"(tagger accuracy {model.accuracy:.4f})"
    )
    return model
