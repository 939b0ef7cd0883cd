import pytest

from src.errors import AlignmentError, DataError
from src.tagging import BaselineTagger, TaggerModel, modal_tag, parse_predictions, read_predictions, tag, train_tagger
from src.treebank import Treebank, write_conllu

from conftest import make_tree


def flat_sentence(pairs):
    forms, tags = zip(*pairs)
    return make_tree([0] * len(pairs), tags=list(tags), forms=list(forms))


@pytest.fixture
def training():
    return Treebank((
        flat_sentence([("the", "DET"), ("dog", "NOUN"), ("run", "VERB")]),
        flat_sentence([("a", "DET"), ("run", "VERB"), ("walking", "VERB")]),
        flat_sentence([("run", "NOUN"), ("run", "NOUN"), ("run", "VERB"), ("Dog", "NOUN")]),
        flat_sentence([("big", "ADJ"), ("dog", "NOUN"), ("cat", "NOUN")]),
    ), name="train")


def test_known_form(training):
    model = train_tagger(training)
    assert model.predict("dog") == "NOUN"
    assert model.predict("the") == "DET"


def test_modal_tag_of_ambiguous_form(training):
    # "run": 3 VERB, 2 NOUN
    assert train_tagger(training).predict("run") == "VERB"


def test_lowercase_fallback(training):
    assert train_tagger(training).predict("THE") == "DET"


def test_suffix_fallback(training):
    assert train_tagger(training).predict("barking") == "VERB"


def test_unknown_word_gets_prior_mode(training):
    model = train_tagger(training)
    assert model.default_tag == "NOUN"
    assert model.predict("xyz") == "NOUN"


def test_modal_tag_ties():
    assert modal_tag({"VERB": 2, "NOUN": 2, "ADJ": 1}) == "NOUN"


def test_tagging_keeps_shape(training):
    predicted = tag(train_tagger(training), training)
    assert [len(s) for s in predicted] == [len(s) for s in training]


def test_untrained_tagger():
    with pytest.raises(DataError):
        BaselineTagger().tag(Treebank(()))


def test_empty_training_set():
    with pytest.raises(DataError):
        train_tagger(Treebank((), name="empty"))


def test_model_json_round_trip(training, tmp_path):
    model = train_tagger(training)
    assert TaggerModel.from_json(model.to_json()) == model
    path = tmp_path / "tagger.json"
    model.save(path)
    assert TaggerModel.load(path).predict("run") == "VERB"


@pytest.mark.parametrize("text", ["{", '{"format": 2}', '{"format": 1}'])
def test_invalid_model_documents(text):
    with pytest.raises(DataError):
        TaggerModel.from_json(text)


def test_bad_prior():
    with pytest.raises(DataError):
        TaggerModel(form_counts={}, suffix_counts={}, prior={"NOUN": 0.5})


def test_baseline_errors_look_like_a_tagger(synthetic_corpus):
    train = Treebank(synthetic_corpus.sentences[:300], name="train")
    test = Treebank(synthetic_corpus.sentences[300:], name="test")
    predicted = BaselineTagger(train_tagger(train)).tag(test)
    correct = sum(1 for s, tags in zip(test, predicted) for g, p in zip(s.tags, tags) if g == p)
    accuracy = correct / test.n_tokens
    # shared forms such as "run" and "fast" keep it below perfect
    assert 0.5 < accuracy < 1.0


# ==========================================
# PREDICTION FILES
# ==========================================

@pytest.fixture
def gold(example_tree):
    return Treebank((example_tree, example_tree), name="gold")


def test_predictions_from_conllu(gold):
    predicted = gold.with_tags([["DET", "VERB", "VERB", "NOUN"], list(gold[1].tags)])
    tags = parse_predictions(write_conllu(predicted), gold)
    assert tags == [["DET", "VERB", "VERB", "NOUN"], ["DET", "NOUN", "VERB", "NOUN"]]


def test_predictions_from_label_file(gold):
    block = "1\tthe\tDET\t+1@NOUN\tdet\n2\tdog\tADJ\t+1@VERB\tnsubj\n3\tchased\tVERB\t-1@ROOT\troot\n4\tcats\tNOUN\t-1@VERB\tobj\n\n"
    assert parse_predictions(block * 2, gold)[0] == ["DET", "ADJ", "VERB", "NOUN"]


def test_predictions_from_two_columns(gold, tmp_path):
    block = "the\tDET\ndog\tNOUN\nchased\tNOUN\ncats\tNOUN\n\n"
    path = tmp_path / "pred.tsv"
    path.write_text(block * 2, encoding="utf-8")
    assert read_predictions(path, gold)[1] == ["DET", "NOUN", "NOUN", "NOUN"]


def test_hash_forms_are_tokens_not_comments():
    gold = Treebank((make_tree([2, 0], tags=["PROPN", "VERB"], forms=["#NLP", "rocks"]),))
    text = "# sent_id = 1\n#NLP\tPROPN\nrocks\tVERB\n\n"
    assert parse_predictions(text, gold) == [["PROPN", "VERB"]]
    label_text = "# sent_id = 1\n1\t#NLP\tX\t+1@VERB\tnsubj\n2\trocks\tVERB\t-1@ROOT\troot\n\n"
    assert parse_predictions(label_text, gold) == [["X", "VERB"]]


def test_prediction_misalignment(gold):
    with pytest.raises(AlignmentError):
        parse_predictions("the\tDET\n\n", gold)
    with pytest.raises(AlignmentError):
        parse_predictions("the\tDET\ndog\tNOUN\n\nthe\tDET\n\n", gold)


def test_unknown_prediction_layout(gold):
    with pytest.raises(DataError):
        parse_predictions("a\tb\tc\n\n", gold)
