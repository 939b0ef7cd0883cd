"""
CoNLL-U reader/writer and the immutable sentence model

Only the syntactic-word columns the pipeline needs are interpreted
(ID, FORM, UPOS, HEAD, DEPREL). Every other column is carried as an opaque
string and multiword-token / empty-node lines are kept verbatim so that a
parse/write round trip only changes what the caller changed.
"""

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple

from ..errors import AlignmentError, ConlluParseError, TreeValidationError
from .tree_algebra import check_heads

logger = logging.getLogger(__name__)

N_COLUMNS = 10


@dataclass(frozen=True)
class Token:
    """One syntactic word (a CoNLL-U line with an integer ID)"""

    index: int
    form: str
    upos: str
    head: int
    deprel: str
    lemma: str = "_"
    xpos: str = "_"
    feats: str = "_"
    deps: str = "_"
    misc: str = "_"

    def __post_init__(self):
        if self.index < 1:
            raise TreeValidationError(f"token index must be >= 1, got {self.index}", token_index=self.index)
        if self.head < 0:
            raise TreeValidationError("head out of range", token_index=self.index)
        if self.head == self.index:
            raise TreeValidationError("token is its own head", token_index=self.index)
        if not self.upos:
            raise TreeValidationError("empty UPOS", token_index=self.index)

    def to_line(self) -> str:
        return "\t".join([
            str(self.index), self.form, self.lemma, self.upos, self.xpos,
            self.feats, str(self.head), self.deprel, self.deps, self.misc
        ])


@dataclass(frozen=True)
class DepTree:
    """
    One sentence: ordered tokens plus the lines that are not syntactic words

    extra_lines holds (number of tokens preceding the line, raw line) for
    multiword-token ranges and empty nodes.
    """

    tokens: Tuple[Token, ...]
    comments: Tuple[str, ...] = ()
    extra_lines: Tuple[Tuple[int, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "comments", tuple(self.comments))
        object.__setattr__(self, "extra_lines", tuple(self.extra_lines))
        for position, token in enumerate(self.tokens, start=1):
            if token.index != position:
                raise TreeValidationError(
                    f"token IDs must run 1..n, found {token.index} at position {position}",
                    token_index=token.index
                )
        problem = check_heads(self.heads)
        if problem is not None:
            token_index, message = problem
            raise TreeValidationError(message, token_index=token_index)

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def heads(self) -> Tuple[int, ...]:
        return tuple(token.head for token in self.tokens)

    @property
    def deprels(self) -> Tuple[str, ...]:
        return tuple(token.deprel for token in self.tokens)

    @property
    def tags(self) -> Tuple[str, ...]:
        return tuple(token.upos for token in self.tokens)

    @property
    def forms(self) -> Tuple[str, ...]:
        return tuple(token.form for token in self.tokens)

    def arcs(self) -> List[Tuple[int, int]]:
        """(head, dependent) pairs, root arcs included"""
        return [(token.head, token.index) for token in self.tokens]

    def with_heads(self, heads: Sequence[int], deprels: Optional[Sequence[str]] = None) -> "DepTree":
        """
        Copy of the tree with new heads (and optionally relations)

        Args:
            heads: One head per token, 0 for the root
            deprels: One relation per token, or None to keep the current ones

        Returns:
            New DepTree; comments and opaque columns are untouched
        """
        if len(heads) != len(self.tokens):
            raise TreeValidationError(f"expected {len(self.tokens)} heads, got {len(heads)}")
        deprels = self.deprels if deprels is None else deprels
        tokens = tuple(
            replace(token, head=int(head), deprel=deprel)
            for token, head, deprel in zip(self.tokens, heads, deprels)
        )
        return replace(self, tokens=tokens)

    def with_tags(self, tags: Sequence[str]) -> "DepTree":
        """Copy of the tree with new UPOS tags (column 4 only)"""
        if len(tags) != len(self.tokens):
            raise TreeValidationError(f"expected {len(self.tokens)} tags, got {len(tags)}")
        tokens = tuple(replace(token, upos=tag) for token, tag in zip(self.tokens, tags))
        return replace(self, tokens=tokens)

    def to_lines(self) -> List[str]:
        lines = list(self.comments)
        extras = list(self.extra_lines)
        cursor = 0
        for preceding in range(len(self.tokens) + 1):
            while cursor < len(extras) and extras[cursor][0] == preceding:
                lines.append(extras[cursor][1])
                cursor += 1
            if preceding < len(self.tokens):
                lines.append(self.tokens[preceding].to_line())
        return lines

    @classmethod
    def from_heads(
        cls,
        heads: Sequence[int],
        deprels: Optional[Sequence[str]] = None,
        forms: Optional[Sequence[str]] = None,
        tags: Optional[Sequence[str]] = None
    ) -> "DepTree":
        """Build a bare tree; missing columns default to '_'"""
        n = len(heads)
        deprels = deprels if deprels is not None else ["_"] * n
        forms = forms if forms is not None else ["_"] * n
        tags = tags if tags is not None else ["_"] * n
        tokens = tuple(
            Token(index=i, form=forms[i - 1], upos=tags[i - 1], head=int(heads[i - 1]), deprel=deprels[i - 1])
            for i in range(1, n + 1)
        )
        return cls(tokens=tokens)


@dataclass(frozen=True)
class SentenceIssue:
    """A sentence rejected by validation while parsing with skip_invalid=True"""

    sentence_index: int
    line_no: int
    message: str


@dataclass(frozen=True)
class Treebank:
    """An ordered collection of sentences"""

    sentences: Tuple[DepTree, ...]
    name: str = "treebank"
    issues: Tuple[SentenceIssue, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "sentences", tuple(self.sentences))
        object.__setattr__(self, "issues", tuple(self.issues))

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[DepTree]:
        return iter(self.sentences)

    def __getitem__(self, index: int) -> DepTree:
        return self.sentences[index]

    @property
    def n_tokens(self) -> int:
        return sum(len(sentence) for sentence in self.sentences)

    def tags(self) -> List[List[str]]:
        return [list(sentence.tags) for sentence in self.sentences]

    def with_sentences(self, sentences: Sequence[DepTree], name: Optional[str] = None) -> "Treebank":
        return Treebank(sentences=tuple(sentences), name=name or self.name)

    def with_tags(self, tags: Sequence[Sequence[str]]) -> "Treebank":
        """Copy with new UPOS tags; tags must align sentence by sentence"""
        if len(tags) != len(self.sentences):
            raise AlignmentError(f"expected tags for {len(self.sentences)} sentences, got {len(tags)}")
        sentences = []
        for index, (sentence, sentence_tags) in enumerate(zip(self.sentences, tags)):
            if len(sentence_tags) != len(sentence):
                raise AlignmentError(
                    f"sentence {index}: expected {len(sentence)} tags, got {len(sentence_tags)}"
                )
            sentences.append(sentence.with_tags(sentence_tags))
        return self.with_sentences(sentences)


# ==========================================
# PARSING
# ==========================================

def _parse_token(fields: List[str], line_no: int) -> Token:
    try:
        index = int(fields[0])
    except ValueError:
        raise ConlluParseError(line_no, f"invalid token ID {fields[0]!r}") from None
    try:
        head = int(fields[6])
    except ValueError:
        raise ConlluParseError(line_no, f"non-integer head {fields[6]!r}") from None
    return Token(
        index=index, form=fields[1], lemma=fields[2], upos=fields[3], xpos=fields[4],
        feats=fields[5], head=head, deprel=fields[7], deps=fields[8], misc=fields[9]
    )


def _build_sentence(comments: List[str], rows: List[Tuple[int, str]], sentence_index: int) -> DepTree:
    tokens: List[Token] = []
    extras: List[Tuple[int, str]] = []
    for line_no, line in rows:
        fields = line.split("\t")
        if len(fields) != N_COLUMNS:
            raise ConlluParseError(line_no, f"expected {N_COLUMNS} tab-separated columns, got {len(fields)}")
        token_id = fields[0]
        if "-" in token_id or "." in token_id:
            extras.append((len(tokens), line))
            continue
        try:
            tokens.append(_parse_token(fields, line_no))
        except TreeValidationError as e:
            raise TreeValidationError(e.message, sentence_index=sentence_index, token_index=e.token_index) from None

    n = len(tokens)
    for token in tokens:
        if token.head > n:
            raise TreeValidationError("head out of range", sentence_index=sentence_index, token_index=token.index)
    try:
        return DepTree(tokens=tuple(tokens), comments=tuple(comments), extra_lines=tuple(extras))
    except TreeValidationError as e:
        raise TreeValidationError(
            e.message, sentence_index=sentence_index, token_index=e.token_index
        ) from None


def parse_conllu(text: str, name: str = "treebank", skip_invalid: bool = False) -> Treebank:
    """
    Parse CoNLL-U text into a Treebank

    Args:
        text: File contents
        name: Treebank name carried into reports
        skip_invalid: Drop sentences that fail tree validation (recorded in
            Treebank.issues) instead of raising

    Returns:
        Treebank; empty input gives zero sentences

    Raises:
        ConlluParseError: Wrong column count, non-integer ID or head
        TreeValidationError: Head out of range, cycle, bad ID sequence
    """
    sentences: List[DepTree] = []
    issues: List[SentenceIssue] = []
    comments: List[str] = []
    rows: List[Tuple[int, str]] = []
    start_line = 1

    def flush():
        if not rows:
            return
        sentence_index = len(sentences) + len(issues)
        try:
            sentences.append(_build_sentence(comments, rows, sentence_index))
        except TreeValidationError as e:
            if not skip_invalid:
                raise
            logger.warning(f"Skipping invalid sentence at line {start_line}: {e}")
            issues.append(SentenceIssue(sentence_index=sentence_index, line_no=start_line, message=str(e)))

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            if not rows and comments:
                # comment-only block (e.g. "# newdoc"): it belongs to the next sentence
                continue
            flush()
            comments, rows = [], []
            start_line = line_no + 1
            continue
        if line.startswith("#"):
            comments.append(line)
        else:
            rows.append((line_no, line))
    flush()
    if comments and not rows:
        logger.warning(f"Dropping {len(comments)} trailing comment line(s) with no sentence after line {start_line}")

    return Treebank(sentences=tuple(sentences), name=name, issues=tuple(issues))


def write_conllu(tb: Treebank) -> str:
    """
    Serialize a Treebank to CoNLL-U text

    Args:
        tb: Treebank to write

    Returns:
        Text with one blank line after every sentence
    """
    return "".join("\n".join(sentence.to_lines()) + "\n\n" for sentence in tb.sentences)


def read_conllu(path: Path, name: Optional[str] = None, skip_invalid: bool = False) -> Treebank:
    """
    Load a CoNLL-U file

    Args:
        path: File to read
        name: Treebank name (defaults to the file stem)
        skip_invalid: See parse_conllu

    Returns:
        Parsed Treebank
    """
    path = Path(path)
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    tb = parse_conllu(text, name=name or path.stem, skip_invalid=skip_invalid)
    logger.info(f"Loaded {len(tb)} sentences ({tb.n_tokens} tokens) from {path}")
    if tb.issues:
        logger.warning(f"{len(tb.issues)} invalid sentences skipped in {path}")
    return tb


def write_conllu_file(tb: Treebank, path: Path):
    """Write a Treebank to disk, creating parent directories"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(write_conllu(tb))
    logger.info(f"Saved {len(tb)} sentences to {path}")
