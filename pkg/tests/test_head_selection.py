import pytest

from src.encodings import ROOT_TAG, HeadSelLabel, decode_rph, encode_rph
from src.errors import AlignmentError, LabelError
from src.evals import attachment_scores
from src.treebank import Treebank

from conftest import make_tree


def offsets(encoded):
    return [(label.offset, label.tag) for label in encoded.labels]


def test_encode_example(example_tree):
    encoded = encode_rph(example_tree)
    assert offsets(encoded) == [(1, "NOUN"), (1, "VERB"), (-1, ROOT_TAG), (-1, "VERB")]
    assert [str(label) for label in encoded.labels] == ["+1@NOUN", "+1@VERB", "-1@ROOT", "-1@VERB"]
    assert encoded.deprels == ("det", "nsubj", "root", "obj")


def test_encode_single_token():
    assert offsets(encode_rph(make_tree([0], tags=["INTJ"]))) == [(-1, ROOT_TAG)]


def test_encode_nearest_same_tag():
    assert offsets(encode_rph(make_tree([2, 0], tags=["NOUN", "NOUN"]))) == [(1, "NOUN"), (-1, ROOT_TAG)]


def test_rank_counts_only_matching_tags():
    tree = make_tree([0, 1, 1, 1, 3], tags=["VERB", "NOUN", "ADJ", "NOUN", "ADV"])
    # token 5 attaches to the first ADJ to its left
    assert offsets(encode_rph(tree))[4] == (-1, "ADJ")
    tree = make_tree([4, 1, 0, 3], tags=["NOUN", "NOUN", "VERB", "NOUN"])
    # token 1 attaches to the second NOUN to its right
    assert offsets(encode_rph(tree))[0] == (2, "NOUN")


def test_decode_with_gold_tags(example_tree):
    encoded = encode_rph(example_tree)
    decoded = decode_rph(encoded.labels, example_tree.tags, encoded.deprels)
    assert decoded.tree.heads == (2, 3, 0, 3)
    assert decoded.repairs.total == 0


def test_decode_with_corrupted_tags(example_tree):
    encoded = encode_rph(example_tree)
    corrupted = ["DET", "VERB", "VERB", "NOUN"]
    decoded = decode_rph(encoded.labels, corrupted, encoded.deprels, forms=example_tree.forms)
    assert decoded.tree.heads == (4, 3, 0, 3)
    assert decoded.tree.tags == tuple(corrupted)
    scores = attachment_scores(Treebank((example_tree,)), Treebank((decoded.tree,)))
    assert scores.uas == pytest.approx(0.75)


def test_decode_clamps_to_farthest_candidate():
    labels = [HeadSelLabel(2, "NOUN"), HeadSelLabel(1, "VERB"), HeadSelLabel(-1, ROOT_TAG)]
    decoded = decode_rph(labels, ["DET", "NOUN", "VERB"], ["det", "nsubj", "root"])
    assert decoded.tree.heads == (2, 3, 0)
    assert decoded.repairs.fallbacks == 1


def test_decode_without_candidate_goes_to_root():
    labels = [HeadSelLabel(1, "ADJ"), HeadSelLabel(-1, ROOT_TAG)]
    decoded = decode_rph(labels, ["NOUN", "VERB"], ["amod", "root"])
    assert decoded.tree.heads == (0, 0)
    assert decoded.repairs.fallbacks == 1


def test_decode_misaligned_tags():
    with pytest.raises(AlignmentError):
        decode_rph([HeadSelLabel(-1, ROOT_TAG)], ["NOUN", "VERB"], ["root"])


def test_round_trip_on_random_trees(random_trees):
    for tree in random_trees:
        encoded = encode_rph(tree)
        assert decode_rph(encoded.labels, tree.tags, encoded.deprels).tree.heads == tree.heads


@pytest.mark.parametrize("text", ["+2@NOUN", "-1@ROOT", "-13@PROPN"])
def test_label_surface_syntax(text):
    assert str(HeadSelLabel.from_string(text)) == text


@pytest.mark.parametrize("text", ["0@NOUN", "+2", "2@NOUN", "+x@NOUN", "+1@"])
def test_malformed_labels(text):
    with pytest.raises(LabelError):
        HeadSelLabel.from_string(text)
