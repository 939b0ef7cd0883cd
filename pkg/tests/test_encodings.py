import numpy as np
import pytest

from src.encodings import (
    ROOT_TAG,
    ArcHybridEncoding,
    BracketLabel,
    EncodingId,
    HeadSelectionEncoding,
    HeadSelLabel,
    TransitionLabel,
    decode_2pb,
    decode_rph,
    decode_transitions,
    format_label_file,
    get_encoding,
    labeled_to_treebank,
    parse_label,
    parse_label_file,
    round_trip_rates,
)
from src.errors import AlignmentError, LabelError, NotProjectiveError
from src.treebank import Treebank, check_heads
from src.treebank.synthetic import TAGSET


TAG_FREE = [EncodingId.BRACKETS_2P, EncodingId.ARC_HYBRID, EncodingId.COVINGTON]


@pytest.mark.parametrize("encoding_id", list(EncodingId))
def test_get_encoding(encoding_id):
    encoding = get_encoding(encoding_id.value)
    assert encoding.encoding_id == encoding_id
    assert encoding.name == encoding_id.value
    assert encoding.uses_tags == (encoding_id == EncodingId.HEAD_SELECTION)


def test_unknown_encoding():
    with pytest.raises(LabelError, match="unknown encoding"):
        get_encoding("rp_x")


@pytest.mark.parametrize("encoding_id", TAG_FREE)
def test_tag_free_decoders_ignore_tags(random_trees, encoding_id):
    rng = np.random.default_rng(99)
    encoding = get_encoding(encoding_id, **({"projectivize": True} if encoding_id == EncodingId.ARC_HYBRID else {}))
    for tree in random_trees[:100]:
        encoded = encoding.encode(tree)
        reference = encoding.decode(encoded.labels, encoded.deprels, tags=tree.tags).tree.heads
        for _ in range(10):
            tags = [str(t) for t in rng.choice(TAGSET, size=len(tree))]
            assert encoding.decode(encoded.labels, encoded.deprels, tags=tags).tree.heads == reference


def test_head_selection_needs_tags(example_tree):
    encoding = HeadSelectionEncoding()
    encoded = encoding.encode(example_tree)
    with pytest.raises(AlignmentError):
        encoding.decode(encoded.labels, encoded.deprels)


def test_arc_hybrid_projectivize_option(crossing_tree):
    with pytest.raises(NotProjectiveError):
        ArcHybridEncoding().encode(crossing_tree)
    encoded = ArcHybridEncoding(projectivize=True).encode(crossing_tree)
    decoded = ArcHybridEncoding().decode(encoded.labels, encoded.deprels)
    assert decoded.tree.heads == (2, 0, 4, 2)


def test_encode_treebank_skips_or_raises(example_tree, crossing_tree):
    tb = Treebank((example_tree, crossing_tree), name="mix")
    encoding = get_encoding(EncodingId.ARC_HYBRID)
    with pytest.raises(NotProjectiveError) as info:
        encoding.encode_treebank(tb)
    assert info.value.sentence_index == 1
    encoded = encoding.encode_treebank(tb, skip_unencodable=True)
    assert encoded[0] is not None
    assert encoded[1] is None


@pytest.mark.parametrize("encoding_id", list(EncodingId))
def test_decode_treebank_recovers_gold(synthetic_corpus, encoding_id):
    tb = Treebank(tuple(s for s in synthetic_corpus if len(s) <= 6), name="short")
    encoding = get_encoding(encoding_id, **({"projectivize": True} if encoding_id == EncodingId.ARC_HYBRID else {}))
    encoded = encoding.encode_treebank(tb)
    decoded, repairs = encoding.decode_treebank(encoded, tb)
    assert len(decoded) == len(tb)
    assert [s.forms for s in decoded] == [s.forms for s in tb]
    if encoding_id in (EncodingId.HEAD_SELECTION, EncodingId.COVINGTON):
        assert decoded == tb
        assert repairs.total == 0


def test_decode_treebank_checks_alignment(example_tree):
    tb = Treebank((example_tree,))
    encoding = get_encoding(EncodingId.HEAD_SELECTION)
    encoded = encoding.encode_treebank(tb)
    with pytest.raises(AlignmentError):
        encoding.decode_treebank(encoded * 2, tb)
    with pytest.raises(AlignmentError):
        encoding.decode_treebank(encoded, tb, tags=[["DET", "NOUN"]])


def test_round_trip_rates(random_trees):
    tb = Treebank(tuple(random_trees[:300]), name="random")
    rates = round_trip_rates(tb)
    assert set(rates) == {"rp_h", "2p_b", "ah_tb", "c_tb"}
    assert rates["rp_h"]["exact_rate"] == 1.0
    assert rates["c_tb"]["exact_rate"] == 1.0
    assert rates["2p_b"]["arc_rate"] <= 1.0
    assert rates["ah_tb"]["exact_rate"] < 1.0
    assert all(r["arcs"] == tb.n_tokens for r in rates.values())


@pytest.mark.parametrize("encoding_id", list(EncodingId))
def test_label_file_round_trip(example_tree, crossing_tree, encoding_id):
    trees = [example_tree] if encoding_id == EncodingId.ARC_HYBRID else [example_tree, crossing_tree]
    tb = Treebank(tuple(trees))
    encoded = get_encoding(encoding_id).encode_treebank(tb)
    text = format_label_file(tb, encoded)
    parsed = parse_label_file(text, encoding_id)
    assert [s.encoded.labels for s in parsed] == [e.labels for e in encoded]
    assert [s.tags for s in parsed] == [s.tags for s in tb]
    skeleton = labeled_to_treebank(parsed)
    assert all(set(s.heads) == {0} for s in skeleton)
    assert [s.forms for s in skeleton] == [s.forms for s in tb]


def test_label_file_layout(example_tree):
    encoded = get_encoding("rp_h").encode_treebank(Treebank((example_tree,)))
    text = format_label_file(Treebank((example_tree,)), encoded)
    assert text.splitlines()[0] == "1\tthe\tDET\t+1@NOUN\tdet"
    assert text.endswith("\n\n")


def test_label_file_errors():
    with pytest.raises(LabelError, match="line 1"):
        parse_label_file("1\tthe\tDET\t+1@NOUN\n", "rp_h")
    with pytest.raises(LabelError, match="line 2"):
        parse_label_file("1\ta\tX\t-1@ROOT\troot\n3\tb\tX\t-1@X\tdep\n", "rp_h")
    with pytest.raises(LabelError, match="line 1"):
        parse_label_file("1\ta\tX\tSH;QQ\troot\n", "c_tb")


def test_parse_label_dispatch():
    assert str(parse_label("-1@ROOT", "rp_h")) == "-1@ROOT"
    assert str(parse_label("\\<", "2p_b")) == "\\<"
    assert str(parse_label("SH;RA", EncodingId.COVINGTON)) == "SH;RA"


# ==========================================
# ARBITRARY LABEL SEQUENCES
# ==========================================

def random_head_sel_label(rng):
    offset = int(rng.choice([-3, -2, -1, 1, 2, 3]))
    tag = str(rng.choice(list(TAGSET) + [ROOT_TAG]))
    return HeadSelLabel(offset, tag)


def random_bracket_label(rng):
    counts = [[0, int(rng.integers(0, 3)), 0, int(rng.integers(0, 3))] for _ in range(2)]
    # at most one head bracket (">" or "<") across both planes
    head = int(rng.integers(0, 5))
    if head:
        counts[(head - 1) // 2][0 if head % 2 else 2] = 1
    return BracketLabel.from_counts(tuple(tuple(c) for c in counts))


def random_transition_label(rng):
    extra = rng.choice(["LA", "RA", "NA"], size=int(rng.integers(0, 4)))
    return TransitionLabel(("SH",) + tuple(str(a) for a in extra))


def test_decoders_always_return_valid_trees():
    rng = np.random.default_rng(2024)
    for _ in range(500):
        n = int(rng.integers(1, 13))
        deprels = ["dep"] * n
        tags = [str(t) for t in rng.choice(list(TAGSET), size=n)]

        decoded = decode_rph([random_head_sel_label(rng) for _ in range(n)], tags, deprels)
        assert check_heads(decoded.tree.heads) is None

        decoded = decode_2pb([random_bracket_label(rng) for _ in range(n)], deprels)
        assert check_heads(decoded.tree.heads) is None

        labels = [random_transition_label(rng) for _ in range(n)]
        for system in (EncodingId.ARC_HYBRID, EncodingId.COVINGTON):
            decoded = decode_transitions(labels, system, deprels)
            assert len(decoded.tree) == n
            assert check_heads(decoded.tree.heads) is None
