import pytest

from src.encodings import (
    UNENCODABLE,
    BracketLabel,
    assign_planes,
    bracket_symbol_count,
    decode_2pb,
    encode_2pb,
    plane_counts,
)
from src.errors import LabelError
from src.treebank import check_heads

from conftest import make_tree


def test_encode_example(example_tree):
    encoded = encode_2pb(example_tree)
    assert [label.plane1 for label in encoded.labels] == ["<", "\\<", "\\/", ">"]
    assert all(label.plane2 == "" for label in encoded.labels)
    assert encoded.unencodable_arcs == 0


def test_decode_example():
    labels = [BracketLabel(p) for p in ["<", "\\<", "\\/", ">"]]
    decoded = decode_2pb(labels, ["det", "nsubj", "root", "obj"])
    assert decoded.tree.heads == (2, 3, 0, 3)
    # the root arc is not bracketed, so its token is repaired to the root
    assert decoded.repairs.headless == 1
    assert decoded.repairs.discarded_brackets == 0


def test_single_token_has_empty_labels():
    encoded = encode_2pb(make_tree([0]))
    assert encoded.labels == (BracketLabel(),)
    assert str(encoded.labels[0]) == "_"


def test_projective_tree_uses_plane_one(example_tree):
    assert set(assign_planes(example_tree).values()) == {1}


def test_crossing_arc_goes_to_plane_two(crossing_tree):
    planes = assign_planes(crossing_tree)
    assert planes == {(3, 1): 1, (2, 4): 2, (4, 3): 1}
    encoded = encode_2pb(crossing_tree)
    assert [str(label) for label in encoded.labels] == ["<", "/*", "\\<", "\\>*"]
    decoded = decode_2pb(encoded.labels, encoded.deprels)
    assert decoded.tree.heads == crossing_tree.heads


def test_three_mutually_crossing_arcs():
    # (1,4), (2,5) and (3,6) cross pairwise
    tree = make_tree([0, 1, 1, 1, 2, 3])
    planes = assign_planes(tree)
    assert plane_counts(tree) == (3, 1, 1)
    assert planes[(3, 6)] == UNENCODABLE
    encoded = encode_2pb(tree)
    assert encoded.unencodable_arcs == 1
    decoded = decode_2pb(encoded.labels, encoded.deprels)
    assert decoded.tree.heads == (0, 1, 1, 1, 2, 0)


def test_no_same_plane_arcs_cross(random_trees):
    from src.treebank.tree_algebra import arcs_cross

    for tree in random_trees:
        planes = assign_planes(tree)
        for plane in (1, 2):
            on_plane = [arc for arc, p in planes.items() if p == plane]
            assert not any(arcs_cross(a, b) for i, a in enumerate(on_plane) for b in on_plane[i + 1:])


def test_empty_labels_decode_to_flat_tree():
    decoded = decode_2pb([BracketLabel()] * 3, ["dep"] * 3)
    assert decoded.tree.heads == (0, 0, 0)


def test_stray_closer_is_discarded():
    decoded = decode_2pb([BracketLabel(">"), BracketLabel()], ["dep", "root"])
    assert decoded.tree.heads == (0, 0)
    assert decoded.repairs.discarded_brackets == 1


def test_unmatched_opener_is_discarded():
    decoded = decode_2pb([BracketLabel("/"), BracketLabel("/")], ["root", "dep"])
    assert decoded.tree.heads == (0, 0)
    assert decoded.repairs.discarded_brackets == 2


def test_round_trip_and_symbol_count(random_trees):
    for tree in random_trees:
        encoded = encode_2pb(tree)
        non_root = sum(1 for h in tree.heads if h != 0)
        assert bracket_symbol_count(encoded) == 2 * (non_root - encoded.unencodable_arcs)
        decoded = decode_2pb(encoded.labels, encoded.deprels)
        assert check_heads(decoded.tree.heads) is None
        dropped = {dep for (head, dep), plane in assign_planes(tree).items() if plane == UNENCODABLE}
        for dep, (gold, predicted) in enumerate(zip(tree.heads, decoded.tree.heads), start=1):
            # only dependents of dropped arcs lose their head, and they go to the root
            assert predicted == (0 if dep in dropped else gold)


@pytest.mark.parametrize("text", ["_", "<", "\\\\</", ">\\/*", "\\*<*", "/>*"])
def test_label_surface_syntax(text):
    assert str(BracketLabel.from_string(text)) == text


@pytest.mark.parametrize("text", ["<>", "x", "/<", "//>"])
def test_malformed_labels(text):
    with pytest.raises(LabelError):
        BracketLabel.from_string(text)


def test_two_head_brackets_rejected():
    with pytest.raises(LabelError):
        BracketLabel(plane1=">", plane2="<*")
