"""
Label types shared by the four linearizations, with their surface syntax

  head selection   +2@NOUN, -1@ROOT
  2-planar         plane-1 symbols verbatim, plane-2 starred, e.g. \\</*  ("_" when empty)
  transitions      actions joined by ';', e.g. SH;LA
"""

import re
from dataclasses import dataclass, fields
from enum import Enum
from typing import Tuple, Union

from ..errors import LabelError

ROOT_TAG = "ROOT"
EMPTY_LABEL = "_"

SHIFT = "SH"
LEFT_ARC = "LA"
RIGHT_ARC = "RA"
NO_ARC = "NA"
ACTIONS = (SHIFT, LEFT_ARC, RIGHT_ARC, NO_ARC)


class EncodingId(str, Enum):
    HEAD_SELECTION = "rp_h"
    BRACKETS_2P = "2p_b"
    ARC_HYBRID = "ah_tb"
    COVINGTON = "c_tb"

    @classmethod
    def parse(cls, value: Union[str, "EncodingId"]) -> "EncodingId":
        try:
            return cls(value)
        except ValueError:
            valid = ", ".join(e.value for e in cls)
            raise LabelError(f"unknown encoding {value!r} (expected one of {valid})") from None


# ==========================================
# HEAD SELECTION
# ==========================================

_HEAD_SEL_RE = re.compile(r"^([+-]\d+)@(\S+)$")


@dataclass(frozen=True)
class HeadSelLabel:
    """Head is the |offset|-th word in direction sign(offset) tagged `tag`"""

    offset: int
    tag: str

    def __post_init__(self):
        if self.offset == 0:
            raise LabelError("head-selection offset must be non-zero")
        if not self.tag:
            raise LabelError("head-selection property must be non-empty")

    def __str__(self) -> str:
        return f"{self.offset:+d}@{self.tag}"

    @classmethod
    def from_string(cls, text: str) -> "HeadSelLabel":
        match = _HEAD_SEL_RE.match(text)
        if not match:
            raise LabelError(f"malformed head-selection label {text!r}")
        return cls(offset=int(match.group(1)), tag=match.group(2))


# ==========================================
# 2-PLANAR BRACKETS
# ==========================================

RIGHT_CLOSE = ">"   # dependent of a right arc
LEFT_CLOSE = "\\"   # head of a left arc
LEFT_OPEN = "<"     # dependent of a left arc
RIGHT_OPEN = "/"    # head of a right arc
BRACKET_SYMBOLS = (RIGHT_CLOSE, LEFT_CLOSE, LEFT_OPEN, RIGHT_OPEN)
STAR = "*"

_PLANE1_RE = re.compile(r"^>?\\*<?/*$")
_PLANE2_RE = re.compile(r"^(>\*)?(\\\*)*(<\*)?(/\*)*$")


@dataclass(frozen=True)
class BracketLabel:
    """Bracket strings of one token; plane2 holds the starred symbols"""

    plane1: str = ""
    plane2: str = ""

    def __post_init__(self):
        if not _PLANE1_RE.match(self.plane1):
            raise LabelError(f"plane-1 brackets out of order: {self.plane1!r}")
        if not _PLANE2_RE.match(self.plane2):
            raise LabelError(f"plane-2 brackets out of order: {self.plane2!r}")
        head_symbols = sum(self.symbols(plane).count(s) for plane in (1, 2) for s in (RIGHT_CLOSE, LEFT_OPEN))
        if head_symbols > 1:
            raise LabelError(f"more than one head bracket in {self}")

    def symbols(self, plane: int) -> str:
        """Bare symbols of one plane, in order"""
        return self.plane1 if plane == 1 else self.plane2.replace(STAR, "")

    @property
    def n_symbols(self) -> int:
        return len(self.plane1) + len(self.symbols(2))

    def __str__(self) -> str:
        return (self.plane1 + self.plane2) or EMPTY_LABEL

    @classmethod
    def from_counts(cls, counts: Tuple[Tuple[int, int, int, int], Tuple[int, int, int, int]]) -> "BracketLabel":
        """Build from per-plane (>, \\, <, /) counts in canonical order"""
        planes = []
        for plane, plane_counts in enumerate(counts, start=1):
            suffix = "" if plane == 1 else STAR
            planes.append("".join((symbol + suffix) * count for symbol, count in zip(BRACKET_SYMBOLS, plane_counts)))
        return cls(plane1=planes[0], plane2=planes[1])

    @classmethod
    def from_string(cls, text: str) -> "BracketLabel":
        if text == EMPTY_LABEL:
            return cls()
        plane1, plane2 = [], []
        i = 0
        while i < len(text):
            symbol = text[i]
            if symbol not in BRACKET_SYMBOLS:
                raise LabelError(f"unknown bracket symbol {symbol!r} in {text!r}")
            if i + 1 < len(text) and text[i + 1] == STAR:
                plane2.append(symbol + STAR)
                i += 2
            else:
                plane1.append(symbol)
                i += 1
        return cls(plane1="".join(plane1), plane2="".join(plane2))


# ==========================================
# TRANSITIONS
# ==========================================

@dataclass(frozen=True)
class TransitionLabel:
    """One read transition followed by the actions up to the next read"""

    actions: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        if not self.actions or self.actions[0] != SHIFT:
            raise LabelError(f"transition label must start with {SHIFT}: {self.actions}")
        if self.actions.count(SHIFT) != 1:
            raise LabelError(f"transition label must contain exactly one {SHIFT}: {self.actions}")
        unknown = [a for a in self.actions if a not in ACTIONS]
        if unknown:
            raise LabelError(f"unknown transitions {unknown}")

    def __str__(self) -> str:
        return ";".join(self.actions)

    @classmethod
    def from_string(cls, text: str) -> "TransitionLabel":
        return cls(actions=tuple(text.split(";")))


Label = Union[HeadSelLabel, BracketLabel, TransitionLabel]

LABEL_TYPES = {
    EncodingId.HEAD_SELECTION: HeadSelLabel,
    EncodingId.BRACKETS_2P: BracketLabel,
    EncodingId.ARC_HYBRID: TransitionLabel,
    EncodingId.COVINGTON: TransitionLabel,
}


def parse_label(text: str, encoding: Union[str, EncodingId]) -> Label:
    """Parse the surface form of a label for the given encoding"""
    return LABEL_TYPES[EncodingId.parse(encoding)].from_string(text)


# ==========================================
# ENCODED SENTENCES AND REPAIR STATISTICS
# ==========================================

@dataclass(frozen=True)
class EncodedSentence:
    """Per-token labels (x_i) paired with relations (l_i)"""

    encoding: EncodingId
    labels: Tuple[Label, ...]
    deprels: Tuple[str, ...]
    unencodable_arcs: int = 0

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "deprels", tuple(self.deprels))
        if len(self.labels) != len(self.deprels):
            raise LabelError(f"{len(self.labels)} labels for {len(self.deprels)} relations")

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class RepairStats:
    """Counts of everything a decoder had to drop, clamp or fix"""

    headless: int = 0
    cycles_broken: int = 0
    fallbacks: int = 0
    discarded_brackets: int = 0
    skipped_actions: int = 0
    unencodable_arcs: int = 0

    def __add__(self, other: "RepairStats") -> "RepairStats":
        return RepairStats(**{f.name: getattr(self, f.name) + getattr(other, f.name) for f in fields(self)})

    @property
    def total(self) -> int:
        return sum(getattr(self, f.name) for f in fields(self))

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}
