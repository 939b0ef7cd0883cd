"""
Reading predicted tags produced by an external tagger

Three layouts are recognised from the first token line:
  - CoNLL-U (10 columns, UPOS in column 4)
  - label file (5 columns, UPOS in column 3)
  - form<TAB>upos (2 columns)
All of them keep one token per line and a blank line between sentences.
"""

import logging
from pathlib import Path
from typing import List, Tuple

from ..errors import AlignmentError, DataError
from ..treebank import Treebank, parse_conllu

logger = logging.getLogger(__name__)

# column count -> (form column, upos column)
_LAYOUTS = {
    5: (1, 2),
    2: (0, 1),
}


def _is_comment(line: str) -> bool:
    # token forms may start with "#", token lines always carry a tab
    return line.startswith("#") and "\t" not in line


def _token_lines(text: str) -> List[str]:
    return [line for line in text.splitlines() if line.strip() and not _is_comment(line)]


def _parse_columns(text: str, n_columns: int) -> List[List[Tuple[str, str]]]:
    form_col, tag_col = _LAYOUTS[n_columns]
    sentences, current = [], []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if current:
                sentences.append(current)
            current = []
            continue
        if _is_comment(line):
            continue
        fields = line.split("\t")
        if len(fields) != n_columns:
            raise DataError(f"line {line_no}: expected {n_columns} columns, got {len(fields)}")
        current.append((fields[form_col], fields[tag_col]))
    if current:
        sentences.append(current)
    return sentences


def parse_predictions(text: str, gold: Treebank) -> List[List[str]]:
    """
    Extract predicted tags aligned with a gold treebank

    Args:
        text: Prediction file contents
        gold: Gold treebank the predictions refer to

    Returns:
        One tag sequence per gold sentence

    Raises:
        AlignmentError: Sentence or token counts differ from gold
    """
    lines = _token_lines(text)
    if not lines:
        rows: List[List[Tuple[str, str]]] = []
    else:
        n_columns = len(lines[0].split("\t"))
        if n_columns == 10:
            predicted_tb = parse_conllu(text, name=f"{gold.name}-predicted")
            rows = [list(zip(s.forms, s.tags)) for s in predicted_tb]
        elif n_columns in _LAYOUTS:
            rows = _parse_columns(text, n_columns)
        else:
            raise DataError(f"unrecognised prediction layout with {n_columns} columns")

    if len(rows) != len(gold):
        raise AlignmentError(f"{len(rows)} predicted sentences for {len(gold)} gold sentences")
    tags = []
    mismatched_forms = 0
    for index, (sentence, predicted) in enumerate(zip(gold, rows)):
        if len(predicted) != len(sentence):
            raise AlignmentError(
                f"sentence {index}: {len(predicted)} predicted tokens for {len(sentence)} gold tokens"
            )
        mismatched_forms += sum(1 for form, (p_form, _) in zip(sentence.forms, predicted) if form != p_form)
        tags.append([tag for _, tag in predicted])
    if mismatched_forms:
        logger.warning(f"{mismatched_forms} predicted forms differ from the gold forms of {gold.name}")
    return tags


def read_predictions(path: Path, gold: Treebank) -> List[List[str]]:
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        tags = parse_predictions(f.read(), gold)
    logger.info(f"Loaded predicted tags for {len(tags)} sentences from {path}")
    return tags
