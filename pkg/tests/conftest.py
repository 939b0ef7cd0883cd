"""
Shared fixtures: the 4-token example sentence, random trees, synthetic corpora
"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.treebank import DepTree, Treebank, write_conllu_file
from src.treebank.synthetic import random_tree, simulate_tagger, synthetic_treebank

REPO_ROOT = Path(__file__).parent.parent
SAMPLE_CONLLU = REPO_ROOT / "data" / "sample" / "en_sample.conllu"

EXAMPLE_CONLLU = (
    "# sent_id = 1\n"
    "# text = the dog chased cats\n"
    "1\tthe\tthe\tDET\tDT\t_\t2\tdet\t_\t_\n"
    "2\tdog\tdog\tNOUN\tNN\tNumber=Sing\t3\tnsubj\t_\t_\n"
    "3\tchased\tchase\tVERB\tVBD\tTense=Past\t0\troot\t_\t_\n"
    "4\tcats\tcat\tNOUN\tNNS\tNumber=Plur\t3\tobj\t_\tSpaceAfter=No\n"
    "\n"
)


def make_tree(heads, tags=None, deprels=None, forms=None) -> DepTree:
    n = len(heads)
    tags = tags or ["NOUN"] * n
    deprels = deprels or ["root" if h == 0 else "dep" for h in heads]
    forms = forms or [f"w{i}" for i in range(1, n + 1)]
    return DepTree.from_heads(list(heads), deprels=deprels, forms=forms, tags=tags)


@pytest.fixture
def example_tree() -> DepTree:
    """the/DET dog/NOUN chased/VERB cats/NOUN, heads [2, 3, 0, 3]"""
    return make_tree(
        [2, 3, 0, 3],
        tags=["DET", "NOUN", "VERB", "NOUN"],
        deprels=["det", "nsubj", "root", "obj"],
        forms=["the", "dog", "chased", "cats"],
    )


@pytest.fixture
def crossing_tree() -> DepTree:
    """heads [3, 0, 4, 2]: arc 3->1 crosses both 0->2 and 2->4"""
    return make_tree([3, 0, 4, 2], tags=["DET", "VERB", "NOUN", "ADJ"])


@pytest.fixture(scope="session")
def random_trees():
    """1,000 random valid trees with 1 to 15 tokens"""
    rng = np.random.default_rng(12345)
    return [random_tree(int(rng.integers(1, 16)), rng) for _ in range(1000)]


@pytest.fixture(scope="session")
def synthetic_corpus() -> Treebank:
    return synthetic_treebank(5000, seed=3, name="synthetic")


@pytest.fixture(scope="session")
def simulated_tags(synthetic_corpus):
    return simulate_tagger(synthetic_corpus, seed=4)


@pytest.fixture
def example_file(tmp_path) -> Path:
    path = tmp_path / "example.conllu"
    path.write_text(EXAMPLE_CONLLU, encoding="utf-8")
    return path


@pytest.fixture
def synthetic_files(tmp_path):
    """Train/dev/test CoNLL-U files plus a form<TAB>upos prediction file for test"""
    folder = tmp_path / "synthetic"
    train = synthetic_treebank(3000, seed=11, name="syn-train")
    dev = synthetic_treebank(500, seed=12, name="syn-dev")
    test = synthetic_treebank(2000, seed=13, name="syn-test")
    write_conllu_file(train, folder / "train.conllu")
    write_conllu_file(dev, folder / "dev.conllu")
    write_conllu_file(test, folder / "test.conllu")

    predicted = simulate_tagger(test, seed=14)
    blocks = []
    for sentence, tags in zip(test, predicted):
        blocks.append("".join(f"{form}\t{tag}\n" for form, tag in zip(sentence.forms, tags)) + "\n")
    (folder / "test.pred.tsv").write_text("".join(blocks), encoding="utf-8")
    return {
        "train": folder / "train.conllu",
        "dev": folder / "dev.conllu",
        "test": folder / "test.conllu",
        "predictions": folder / "test.pred.tsv",
        "folder": folder,
    }
