from src.encodings import RepairStats, repair_heads, repair_tree
from src.treebank import check_heads


def test_missing_head_goes_to_root():
    heads, stats = repair_heads([2, None, 1])
    assert heads == [2, 0, 1]
    assert stats == RepairStats(headless=1)


def test_cycle_broken_at_smallest_member():
    heads, stats = repair_heads([2, 1])
    assert heads == [0, 1]
    assert stats.cycles_broken == 1


def test_valid_heads_unchanged():
    heads, stats = repair_heads([2, 3, 0, 3])
    assert heads == [2, 3, 0, 3]
    assert stats.total == 0


def test_out_of_range_and_self_heads():
    heads, stats = repair_heads([5, 2, 0])
    assert heads == [0, 0, 0]
    assert stats.headless == 2


def test_several_cycles():
    heads, stats = repair_heads([2, 1, 4, 3, 0])
    assert check_heads(heads) is None
    assert heads == [0, 1, 0, 3, 0]
    assert stats.cycles_broken == 2


def test_repair_tree_builds_valid_tree():
    decoded = repair_tree([None, None], ["root", "dep"], forms=["a", "b"], tags=["X", "Y"])
    assert decoded.tree.heads == (0, 0)
    assert decoded.tree.forms == ("a", "b")
    assert decoded.tree.tags == ("X", "Y")


def test_repair_stats_add():
    total = RepairStats(headless=1, fallbacks=2) + RepairStats(headless=1, skipped_actions=3)
    assert total.to_dict()["headless"] == 2
    assert total.total == 7
