"""
Label files: one token per line, a blank line between sentences

    index<TAB>form<TAB>upos<TAB>label<TAB>deprel
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from ..errors import LabelError
from ..treebank import DepTree, Treebank
from .labels import EncodedSentence, EncodingId, Label, parse_label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledSentence:
    """One sentence of a label file"""

    forms: Tuple[str, ...]
    tags: Tuple[str, ...]
    encoded: EncodedSentence


def format_label_file(tb: Treebank, encoded: Sequence[EncodedSentence]) -> str:
    """
    Render encoded sentences next to their forms and tags

    Args:
        tb: Treebank providing forms and tags
        encoded: One EncodedSentence per sentence

    Returns:
        Label file text
    """
    if len(tb) != len(encoded):
        raise LabelError(f"{len(encoded)} encoded sentences for {len(tb)} sentences")
    blocks = []
    for sentence, sentence_encoded in zip(tb, encoded):
        rows = [
            f"{token.index}\t{token.form}\t{token.upos}\t{label}\t{deprel}"
            for token, label, deprel in zip(sentence.tokens, sentence_encoded.labels, sentence_encoded.deprels)
        ]
        blocks.append("\n".join(rows) + "\n\n")
    return "".join(blocks)


def parse_label_file(text: str, encoding: Union[str, EncodingId]) -> List[LabeledSentence]:
    """
    Parse label file text

    Args:
        text: File contents
        encoding: Encoding the labels belong to

    Returns:
        One LabeledSentence per block
    """
    encoding = EncodingId.parse(encoding)
    sentences: List[LabeledSentence] = []
    rows: List[Tuple[str, str, Label, str]] = []

    def flush():
        if rows:
            forms, tags, labels, deprels = zip(*rows)
            sentences.append(LabeledSentence(tuple(forms), tuple(tags), EncodedSentence(encoding, labels, deprels)))

    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            flush()
            rows = []
            continue
        fields = line.split("\t")
        if len(fields) != 5:
            raise LabelError(f"line {line_no}: expected 5 tab-separated columns, got {len(fields)}")
        index, form, upos, label_text, deprel = fields
        if index != str(len(rows) + 1):
            raise LabelError(f"line {line_no}: expected token index {len(rows) + 1}, got {index!r}")
        try:
            label = parse_label(label_text, encoding)
        except LabelError as e:
            raise LabelError(f"line {line_no}: {e}") from None
        rows.append((form, upos, label, deprel))
    flush()
    return sentences


def read_label_file(path: Path, encoding: Union[str, EncodingId]) -> List[LabeledSentence]:
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        sentences = parse_label_file(f.read(), encoding)
    logger.info(f"Loaded {len(sentences)} labeled sentences from {path}")
    return sentences


def labeled_to_treebank(sentences: Sequence[LabeledSentence], name: str = "labels") -> Treebank:
    """Skeleton treebank (all heads on the root) carrying the label file's forms and tags"""
    return Treebank(
        sentences=tuple(
            DepTree.from_heads([0] * len(s.forms), deprels=s.encoded.deprels, forms=s.forms, tags=s.tags)
            for s in sentences
        ),
        name=name
    )
