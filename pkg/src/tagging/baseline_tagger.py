"""
Frequency-based UPOS tagger

Tags each word on its own: exact form, then lowercased form, then the
longest known suffix (4 down to 1 characters), then the most frequent tag
overall. It has no context, so ambiguous forms always get their modal tag,
which yields confusions shaped like a real tagger's.
"""

import json
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Mapping, Optional

from tqdm import tqdm

from ..errors import DataError
from ..treebank import Treebank

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
MAX_SUFFIX = 4

FrequencyTable = Dict[str, Dict[str, int]]


def modal_tag(frequencies: Mapping[str, float]) -> str:
    """Most frequent tag, ties broken by lexicographic tag order"""
    return min(frequencies.items(), key=lambda item: (-item[1], item[0]))[0]


@dataclass(frozen=True)
class TaggerModel:
    """Frequency tables of a trained baseline tagger"""

    form_counts: FrequencyTable
    suffix_counts: FrequencyTable
    prior: Dict[str, float]

    def __post_init__(self):
        for table in (self.form_counts, self.suffix_counts):
            for key, frequencies in table.items():
                if any(n < 0 for n in frequencies.values()):
                    raise DataError(f"negative frequency for {key!r}")
        if self.prior and abs(sum(self.prior.values()) - 1.0) > 1e-6:
            raise DataError("tag prior does not sum to 1")

    @property
    def default_tag(self) -> str:
        return modal_tag(self.prior)

    def predict(self, form: str) -> str:
        """
        Tag one word

        Args:
            form: Surface form

        Returns:
            Predicted UPOS tag
        """
        for key in (form, form.lower()):
            if key in self.form_counts:
                return modal_tag(self.form_counts[key])
        lowered = form.lower()
        for length in range(min(MAX_SUFFIX, len(lowered)), 0, -1):
            suffix = lowered[-length:]
            if suffix in self.suffix_counts:
                return modal_tag(self.suffix_counts[suffix])
        return self.default_tag

    def to_dict(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "forms": {k: dict(sorted(v.items())) for k, v in sorted(self.form_counts.items())},
            "suffixes": {k: dict(sorted(v.items())) for k, v in sorted(self.suffix_counts.items())},
            "prior": dict(sorted(self.prior.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "TaggerModel":
        try:
            data = json.loads(text)
            if data.get("format") != FORMAT_VERSION:
                raise DataError(f"unsupported tagger model format {data.get('format')!r}")
            return cls(form_counts=data["forms"], suffix_counts=data["suffixes"], prior=data["prior"])
        except (json.JSONDecodeError, KeyError, AttributeError) as e:
            raise DataError(f"invalid tagger model document: {e}") from None

    def save(self, path: Path):
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.to_json())
        logger.info(f"Saved tagger model ({len(self.form_counts)} forms) to {path}")

    @classmethod
    def load(cls, path: Path) -> "TaggerModel":
        with open(path, 'r', encoding='utf-8') as f:
            return cls.from_json(f.read())


class BaselineTagger:
    """Trains a TaggerModel and tags treebanks with it"""

    def __init__(self, model: Optional[TaggerModel] = None, progress: bool = False):
        self.model = model
        self.progress = progress
        self.logger = logging.getLogger(self.__class__.__name__)

    def train(self, train: Treebank) -> TaggerModel:
        """
        Collect form, suffix and prior frequencies

        Args:
            train: Gold-tagged training treebank

        Returns:
            The trained TaggerModel (also kept on self.model)
        """
        if train.n_tokens == 0:
            raise DataError(f"cannot train a tagger on empty treebank {train.name}")

        forms: Dict[str, Counter] = defaultdict(Counter)
        suffixes: Dict[str, Counter] = defaultdict(Counter)
        prior: Counter = Counter()
        for sentence in train:
            for token in sentence.tokens:
                forms[token.form][token.upos] += 1
                lowered = token.form.lower()
                for length in range(1, min(MAX_SUFFIX, len(lowered)) + 1):
                    suffixes[lowered[-length:]][token.upos] += 1
                prior[token.upos] += 1

        total = sum(prior.values())
        self.model = TaggerModel(
            form_counts={k: dict(v) for k, v in forms.items()},
            suffix_counts={k: dict(v) for k, v in suffixes.items()},
            prior={t: n / total for t, n in prior.items()},
        )
        self.logger.info(
            f"Trained tagger on {train.name}: {len(forms)} forms, {len(suffixes)} suffixes, "
            f"{len(prior)} tags"
        )
        return self.model

    def tag(self, tb: Treebank) -> List[List[str]]:
        """
        Predict tags for every sentence

        Args:
            tb: Treebank to tag (its gold tags are ignored)

        Returns:
            One tag sequence per sentence
        """
        if self.model is None:
            raise DataError("tagger has not been trained")
        predicted = [
            [self.model.predict(form) for form in sentence.forms]
            for sentence in tqdm(tb, desc=f"Tagging {tb.name}", disable=not self.progress)
        ]
        self.logger.info(f"Tagged {tb.n_tokens} tokens of {tb.name}")
        return predicted


def train_tagger(train: Treebank) -> TaggerModel:
    return BaselineTagger().train(train)


def tag(model: TaggerModel, tb: Treebank) -> List[List[str]]:
    return BaselineTagger(model).tag(tb)
