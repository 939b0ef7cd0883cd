import pytest

from src.encodings import (
    EncodingId,
    TransitionLabel,
    decode_transitions,
    encode_transitions,
    labels_to_transitions,
    oracle_arc_hybrid,
    oracle_covington,
    transitions_to_labels,
)
from src.errors import LabelError, NotProjectiveError
from src.treebank import is_projective

from conftest import make_tree


def actions(labels):
    return [list(label.actions) for label in labels]


def test_arc_hybrid_oracle(example_tree):
    assert oracle_arc_hybrid(example_tree) == ["SH", "LA", "SH", "LA", "SH", "SH", "RA", "RA"]


def test_arc_hybrid_labels(example_tree):
    encoded = encode_transitions(example_tree, EncodingId.ARC_HYBRID)
    assert actions(encoded.labels) == [["SH", "LA"], ["SH", "LA"], ["SH"], ["SH", "RA", "RA"]]
    assert [str(label) for label in encoded.labels] == ["SH;LA", "SH;LA", "SH", "SH;RA;RA"]


def test_covington_labels(example_tree):
    assert oracle_covington(example_tree) == ["SH", "SH", "LA", "SH", "LA", "NA", "RA", "SH", "RA"]
    encoded = encode_transitions(example_tree, "c_tb")
    assert actions(encoded.labels) == [["SH"], ["SH", "LA"], ["SH", "LA", "NA", "RA"], ["SH", "RA"]]


@pytest.mark.parametrize("system", [EncodingId.ARC_HYBRID, EncodingId.COVINGTON])
def test_single_token(system):
    encoded = encode_transitions(make_tree([0]), system)
    assert actions(encoded.labels) == [["SH", "RA"]]


@pytest.mark.parametrize("system", [EncodingId.ARC_HYBRID, EncodingId.COVINGTON])
def test_decode_example(example_tree, system):
    encoded = encode_transitions(example_tree, system)
    decoded = decode_transitions(encoded.labels, system, encoded.deprels)
    assert decoded.tree.heads == (2, 3, 0, 3)
    assert decoded.repairs.total == 0


@pytest.mark.parametrize("system", [EncodingId.ARC_HYBRID, EncodingId.COVINGTON])
def test_invalid_actions_are_skipped(system):
    labels = [TransitionLabel(("SH", "LA", "LA"))]
    decoded = decode_transitions(labels, system, ["root"])
    assert decoded.tree.heads == (0,)
    assert decoded.repairs.skipped_actions == 2
    assert decoded.repairs.headless == 1


def test_too_many_reads_rejected():
    with pytest.raises(LabelError):
        transitions_to_labels(["SH", "SH"], n=1)


def test_sequence_must_start_with_read():
    with pytest.raises(LabelError):
        transitions_to_labels(["LA", "SH"])


def test_arc_hybrid_rejects_non_projective(crossing_tree):
    with pytest.raises(NotProjectiveError):
        encode_transitions(crossing_tree, EncodingId.ARC_HYBRID)


def test_covington_handles_crossing_arcs(crossing_tree):
    encoded = encode_transitions(crossing_tree, EncodingId.COVINGTON)
    decoded = decode_transitions(encoded.labels, EncodingId.COVINGTON, encoded.deprels)
    assert decoded.tree.heads == crossing_tree.heads


def test_labels_concatenate_to_sequence(random_trees):
    for tree in random_trees[:200]:
        sequence = oracle_covington(tree)
        assert labels_to_transitions(transitions_to_labels(sequence, n=len(tree))) == sequence


def test_arc_hybrid_round_trip(random_trees):
    projective = [tree for tree in random_trees if is_projective(tree)]
    assert projective
    for tree in projective:
        encoded = encode_transitions(tree, EncodingId.ARC_HYBRID)
        decoded = decode_transitions(encoded.labels, EncodingId.ARC_HYBRID, encoded.deprels)
        assert decoded.tree.heads == tree.heads
        assert decoded.repairs.total == 0


def test_covington_round_trip(random_trees):
    for tree in random_trees:
        encoded = encode_transitions(tree, EncodingId.COVINGTON)
        decoded = decode_transitions(encoded.labels, EncodingId.COVINGTON, encoded.deprels)
        assert decoded.tree.heads == tree.heads


@pytest.mark.parametrize("text", ["LA", "SH;SH", "SH;XX", ""])
def test_malformed_labels(text):
    with pytest.raises(LabelError):
        TransitionLabel.from_string(text)


def test_head_selection_is_not_a_transition_system(example_tree):
    with pytest.raises(LabelError):
        encode_transitions(example_tree, EncodingId.HEAD_SELECTION)
