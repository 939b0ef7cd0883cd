import pytest

from src.errors import ConlluParseError, TreeValidationError
from src.treebank import DepTree, Token, Treebank, parse_conllu, read_conllu, write_conllu, write_conllu_file

from conftest import EXAMPLE_CONLLU, SAMPLE_CONLLU


def test_parse_four_token_sentence():
    tb = parse_conllu(EXAMPLE_CONLLU)
    assert len(tb) == 1
    tree = tb[0]
    assert len(tree) == 4
    assert tree.heads == (2, 3, 0, 3)
    assert tree.tags == ("DET", "NOUN", "VERB", "NOUN")
    assert tree.deprels == ("det", "nsubj", "root", "obj")
    assert tree.comments == ("# sent_id = 1", "# text = the dog chased cats")


def test_empty_input_gives_empty_treebank():
    tb = parse_conllu("")
    assert len(tb) == 0
    assert tb.n_tokens == 0


def test_head_out_of_range():
    text = EXAMPLE_CONLLU.replace("2\tdog\tdog\tNOUN\tNN\tNumber=Sing\t3", "2\tdog\tdog\tNOUN\tNN\tNumber=Sing\t9")
    with pytest.raises(TreeValidationError, match="head out of range") as info:
        parse_conllu(text)
    assert info.value.sentence_index == 0
    assert info.value.token_index == 2


def test_wrong_column_count_names_line():
    text = "# c\n1\tthe\tthe\tDET\n"
    with pytest.raises(ConlluParseError) as info:
        parse_conllu(text)
    assert info.value.line_no == 2
    assert "line 2" in str(info.value)


def test_non_integer_head_names_line():
    text = EXAMPLE_CONLLU.replace("\t0\troot", "\tx\troot")
    with pytest.raises(ConlluParseError, match="line 5"):
        parse_conllu(text)


def test_cycle_rejected():
    text = (
        "1\ta\t_\tX\t_\t_\t2\tdep\t_\t_\n"
        "2\tb\t_\tX\t_\t_\t1\tdep\t_\t_\n"
        "3\tc\t_\tX\t_\t_\t0\troot\t_\t_\n\n"
    )
    with pytest.raises(TreeValidationError, match="cycle"):
        parse_conllu(text)


def test_skip_invalid_records_issue():
    bad = "1\ta\t_\tX\t_\t_\t5\tdep\t_\t_\n\n"
    tb = parse_conllu(bad + EXAMPLE_CONLLU, skip_invalid=True)
    assert len(tb) == 1
    assert len(tb.issues) == 1
    assert tb.issues[0].sentence_index == 0
    assert tb.issues[0].line_no == 1


def test_round_trip_is_stable():
    tb = parse_conllu(EXAMPLE_CONLLU)
    text = write_conllu(tb)
    assert text == EXAMPLE_CONLLU
    assert parse_conllu(text) == tb


def test_comment_only_block_moves_to_next_sentence():
    tb = parse_conllu("# newdoc id = d1\n\n" + EXAMPLE_CONLLU)
    assert len(tb) == 1
    assert tb[0].comments == ("# newdoc id = d1", "# sent_id = 1", "# text = the dog chased cats")
    assert write_conllu(tb) == "# newdoc id = d1\n" + EXAMPLE_CONLLU


def test_trailing_comments_are_reported(caplog):
    with caplog.at_level("WARNING"):
        tb = parse_conllu(EXAMPLE_CONLLU + "# end of document\n")
    assert len(tb) == 1
    assert "trailing comment" in caplog.text


def test_sample_file_is_byte_stable(tmp_path):
    original = SAMPLE_CONLLU.read_text(encoding="utf-8")
    tb = read_conllu(SAMPLE_CONLLU)
    out = tmp_path / "copy.conllu"
    write_conllu_file(tb, out)
    assert out.read_text(encoding="utf-8") == original


def test_multiword_lines_are_kept_but_not_tokens():
    tb = read_conllu(SAMPLE_CONLLU)
    sentence = tb[1]
    assert sentence.forms == ("I", "do", "n't", "know", ".")
    assert sentence.extra_lines == ((1, "2-3\tdon't\t_\t_\t_\t_\t_\t_\t_\t_"),)


def test_tag_change_only_touches_column_four():
    tb = parse_conllu(EXAMPLE_CONLLU)
    changed = tb.with_tags([["DET", "VERB", "VERB", "NOUN"]])
    before = write_conllu(tb).splitlines()
    after = write_conllu(changed).splitlines()
    diffs = [
        (line_no, column)
        for line_no, (a, b) in enumerate(zip(before, after))
        for column, (x, y) in enumerate(zip(a.split("\t"), b.split("\t")))
        if x != y
    ]
    assert diffs == [(3, 3)]


def test_with_heads_keeps_opaque_columns():
    tree = parse_conllu(EXAMPLE_CONLLU)[0]
    moved = tree.with_heads([2, 3, 0, 2])
    assert moved.heads == (2, 3, 0, 2)
    assert moved.tokens[3].misc == "SpaceAfter=No"
    assert moved.tokens[3].feats == "Number=Plur"


def test_token_invariants():
    with pytest.raises(TreeValidationError):
        Token(index=0, form="a", upos="X", head=0, deprel="root")
    with pytest.raises(TreeValidationError):
        Token(index=2, form="a", upos="X", head=2, deprel="dep")
    with pytest.raises(TreeValidationError):
        Token(index=1, form="a", upos="", head=0, deprel="root")


def test_token_ids_must_be_sequential():
    tokens = (Token(index=1, form="a", upos="X", head=0, deprel="root"),
              Token(index=3, form="b", upos="X", head=1, deprel="dep"))
    with pytest.raises(TreeValidationError):
        DepTree(tokens=tokens)


def test_treebank_sequence_protocol():
    tb = parse_conllu(EXAMPLE_CONLLU * 3, name="ex")
    assert isinstance(tb, Treebank)
    assert len(tb) == 3
    assert tb.n_tokens == 12
    assert [len(s) for s in tb] == [4, 4, 4]
    assert tb.name == "ex"
