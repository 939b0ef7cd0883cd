"""
Encoding classes: one interface over the four linearizations

Every encoding turns a DepTree into an EncodedSentence and decodes label
sequences back into valid trees. Only head selection consumes tags.
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..errors import AlignmentError, NotProjectiveError
from ..treebank import DepTree, Treebank
from ..treebank.tree_algebra import is_projective, projectivize
from .brackets import decode_2pb, encode_2pb
from .head_selection import decode_rph, encode_rph
from .labels import EncodedSentence, EncodingId, Label, RepairStats, parse_label
from .repair import Decoded
from .transitions import decode_transitions, encode_transitions

logger = logging.getLogger(__name__)


class BaseEncoding:
    """Base class for all linearizations with common treebank-level helpers"""

    encoding_id: EncodingId
    uses_tags = False

    def __init__(self):
        self.logger = logging.getLogger(self.__class__.__name__)

    @property
    def name(self) -> str:
        return self.encoding_id.value

    def encode(self, tree: DepTree) -> EncodedSentence:
        raise NotImplementedError("Child class must implement encode()")

    def decode(
        self,
        labels: Sequence[Label],
        deprels: Sequence[str],
        tags: Optional[Sequence[str]] = None,
        forms: Optional[Sequence[str]] = None
    ) -> Decoded:
        raise NotImplementedError("Child class must implement decode()")

    def parse_label(self, text: str) -> Label:
        return parse_label(text, self.encoding_id)

    def encode_treebank(self, tb: Treebank, skip_unencodable: bool = False) -> List[Optional[EncodedSentence]]:
        """
        Encode every sentence of a treebank

        Args:
            tb: Gold treebank
            skip_unencodable: Put None in place of sentences the encoding
                rejects instead of raising

        Returns:
            One EncodedSentence (or None) per sentence
        """
        encoded: List[Optional[EncodedSentence]] = []
        for index, sentence in enumerate(tb):
            try:
                encoded.append(self.encode(sentence))
            except NotProjectiveError:
                if not skip_unencodable:
                    raise NotProjectiveError(sentence_index=index) from None
                self.logger.warning(f"Skipping non-projective sentence {index} for {self.name}")
                encoded.append(None)
        return encoded

    def decode_treebank(
        self,
        encoded: Sequence[EncodedSentence],
        template: Treebank,
        tags: Optional[Sequence[Sequence[str]]] = None
    ) -> Tuple[Treebank, RepairStats]:
        """
        Decode labels sentence by sentence onto a template treebank

        Args:
            encoded: One EncodedSentence per template sentence
            template: Treebank whose forms, comments and opaque columns are kept
            tags: Tags to decode against (head selection only); defaults to the
                template's tags

        Returns:
            (decoded treebank, summed repair statistics)
        """
        if len(encoded) != len(template):
            raise AlignmentError(f"{len(encoded)} encoded sentences for {len(template)} template sentences")
        tags = tags if tags is not None else template.tags()
        if len(tags) != len(template):
            raise AlignmentError(f"tags for {len(tags)} sentences, template has {len(template)}")
        sentences = []
        repairs = RepairStats()
        for sentence, sentence_encoded, sentence_tags in zip(template, encoded, tags):
            decoded = self.decode(sentence_encoded.labels, sentence_encoded.deprels, tags=sentence_tags)
            sentences.append(sentence.with_heads(decoded.tree.heads, decoded.tree.deprels))
            repairs = repairs + decoded.repairs + RepairStats(unencodable_arcs=sentence_encoded.unencodable_arcs)
        return template.with_sentences(sentences), repairs


class HeadSelectionEncoding(BaseEncoding):
    """rp_h: relative offset among words sharing the head's UPOS"""

    encoding_id = EncodingId.HEAD_SELECTION
    uses_tags = True

    def encode(self, tree: DepTree) -> EncodedSentence:
        return encode_rph(tree)

    def decode(self, labels, deprels, tags=None, forms=None) -> Decoded:
        if tags is None:
            raise AlignmentError("head-selection decoding needs a tag sequence")
        return decode_rph(labels, tags, deprels, forms=forms)


class BracketEncoding(BaseEncoding):
    """2p_b: bracket strings on two planes"""

    encoding_id = EncodingId.BRACKETS_2P

    def encode(self, tree: DepTree) -> EncodedSentence:
        return encode_2pb(tree)

    def decode(self, labels, deprels, tags=None, forms=None) -> Decoded:
        return decode_2pb(labels, deprels, forms=forms, tags=tags)


class ArcHybridEncoding(BaseEncoding):
    """
    ah_tb: arc-hybrid transitions split at SHIFT

    With projectivize=True non-projective trees are lifted before encoding,
    so the labels describe the projectivized tree.
    """

    encoding_id = EncodingId.ARC_HYBRID

    def __init__(self, projectivize: bool = False):
        super().__init__()
        self.projectivize = projectivize

    def encode(self, tree: DepTree) -> EncodedSentence:
        if self.projectivize and not is_projective(tree):
            tree = tree.with_heads(projectivize(tree))
        return encode_transitions(tree, self.encoding_id)

    def decode(self, labels, deprels, tags=None, forms=None) -> Decoded:
        return decode_transitions(labels, self.encoding_id, deprels, forms=forms, tags=tags)


class CovingtonEncoding(BaseEncoding):
    """c_tb: Covington transitions split at SHIFT"""

    encoding_id = EncodingId.COVINGTON

    def encode(self, tree: DepTree) -> EncodedSentence:
        return encode_transitions(tree, self.encoding_id)

    def decode(self, labels, deprels, tags=None, forms=None) -> Decoded:
        return decode_transitions(labels, self.encoding_id, deprels, forms=forms, tags=tags)


ENCODINGS = {
    EncodingId.HEAD_SELECTION: HeadSelectionEncoding,
    EncodingId.BRACKETS_2P: BracketEncoding,
    EncodingId.ARC_HYBRID: ArcHybridEncoding,
    EncodingId.COVINGTON: CovingtonEncoding,
}


def get_encoding(encoding: Union[str, EncodingId], **kwargs) -> BaseEncoding:
    """
    Instantiate an encoding by id

    Args:
        encoding: 'rp_h', '2p_b', 'ah_tb' or 'c_tb'
        **kwargs: Passed to the encoding class (e.g. projectivize for ah_tb)

    Returns:
        BaseEncoding subclass instance
    """
    return ENCODINGS[EncodingId.parse(encoding)](**kwargs)


def round_trip_rates(tb: Treebank, encodings: Optional[Sequence[Union[str, EncodingId]]] = None) -> Dict[str, dict]:
    """
    Gold encode/decode round trip per encoding

    Arc-hybrid is run on projectivized trees so non-projective sentences
    count as losses instead of failures.

    Args:
        tb: Gold treebank
        encodings: Encodings to check, all four by default

    Returns:
        encoding id -> {"sentences", "exact", "exact_rate", "arcs", "correct_arcs", "arc_rate"}
    """
    encodings = encodings or list(EncodingId)
    report: Dict[str, dict] = {}
    for encoding_id in encodings:
        kwargs = {"projectivize": True} if EncodingId.parse(encoding_id) == EncodingId.ARC_HYBRID else {}
        encoding = get_encoding(encoding_id, **kwargs)
        exact = correct = 0
        for sentence in tb:
            encoded = encoding.encode(sentence)
            decoded = encoding.decode(encoded.labels, encoded.deprels, tags=sentence.tags)
            if decoded.tree.heads == sentence.heads:
                exact += 1
            correct += sum(1 for g, p in zip(sentence.heads, decoded.tree.heads) if g == p)
        report[encoding.name] = {
            "sentences": len(tb),
            "exact": exact,
            "exact_rate": exact / len(tb) if len(tb) else 1.0,
            "arcs": tb.n_tokens,
            "correct_arcs": correct,
            "arc_rate": correct / tb.n_tokens if tb.n_tokens else 1.0,
        }
        logger.info(f"{encoding.name}: {exact}/{len(tb)} sentences reproduced exactly")
    return report
