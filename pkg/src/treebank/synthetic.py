"""
Synthetic treebanks and a simulated tagger with a fixed confusion structure

Used for property checks, the demo sweep and any setting where no real UD
treebank is at hand. Everything is driven by numpy Generators so a seed fully
determines the output.
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from .conllu import DepTree, Token, Treebank

TAGSET = ("NOUN", "VERB", "ADJ", "ADV", "DET", "ADP", "PRON", "PROPN", "AUX", "CCONJ", "NUM", "PUNCT")
TAG_WEIGHTS = (0.22, 0.14, 0.08, 0.05, 0.10, 0.10, 0.07, 0.05, 0.05, 0.04, 0.03, 0.07)

DEPRELS_BY_TAG = {
    "NOUN": ("nsubj", "obj", "obl", "nmod"),
    "VERB": ("root", "ccomp", "advcl", "xcomp"),
    "ADJ": ("amod",),
    "ADV": ("advmod",),
    "DET": ("det",),
    "ADP": ("case",),
    "PRON": ("nsubj", "obj"),
    "PROPN": ("nsubj", "flat"),
    "AUX": ("aux", "cop"),
    "CCONJ": ("cc",),
    "NUM": ("nummod",),
    "PUNCT": ("punct",),
}

# Per-tag error rate and error-type distribution of the simulated tagger
ERROR_RATES = {
    "NOUN": 0.12, "VERB": 0.10, "ADJ": 0.20, "ADV": 0.15, "DET": 0.02, "ADP": 0.04,
    "PRON": 0.05, "PROPN": 0.25, "AUX": 0.10, "CCONJ": 0.03, "NUM": 0.08, "PUNCT": 0.01,
}
CONFUSIONS = {
    "NOUN": {"VERB": 0.4, "ADJ": 0.3, "PROPN": 0.3},
    "VERB": {"NOUN": 0.5, "AUX": 0.3, "ADJ": 0.2},
    "ADJ": {"NOUN": 0.5, "ADV": 0.3, "VERB": 0.2},
    "ADV": {"ADJ": 0.6, "ADP": 0.4},
    "DET": {"PRON": 1.0},
    "ADP": {"ADV": 0.7, "CCONJ": 0.3},
    "PRON": {"DET": 1.0},
    "PROPN": {"NOUN": 0.8, "ADJ": 0.2},
    "AUX": {"VERB": 1.0},
    "CCONJ": {"ADP": 1.0},
    "NUM": {"NOUN": 0.5, "DET": 0.5},
    "PUNCT": {"NOUN": 1.0},
}

VOCABULARY_SIZE = 40


def random_heads(n: int, rng: np.random.Generator) -> List[int]:
    """
    Uniformly random recursive tree over n tokens

    A random permutation fixes the insertion order; the first inserted token
    hangs from the root and every later one from a random earlier token.
    """
    order = rng.permutation(np.arange(1, n + 1))
    heads = [0] * n
    for position in range(1, n):
        heads[order[position] - 1] = int(order[rng.integers(0, position)])
    return heads


def random_tags(n: int, rng: np.random.Generator) -> List[str]:
    return [str(tag) for tag in rng.choice(TAGSET, size=n, p=TAG_WEIGHTS)]


def _form_for(tag: str, rng: np.random.Generator) -> str:
    # Zipf-like rank so frequent forms repeat; a few forms are shared between tags
    rank = min(int(rng.zipf(1.6)), VOCABULARY_SIZE)
    if rank == 1 and tag in ("NOUN", "VERB"):
        return "run"
    if rank == 1 and tag in ("ADJ", "ADV"):
        return "fast"
    return f"{tag.lower()}{rank}"


def random_tree(n: int, rng: np.random.Generator, tags: Optional[Sequence[str]] = None) -> DepTree:
    """
    Random valid tree with tags, forms and tag-consistent relations

    Args:
        n: Number of tokens
        rng: Random generator
        tags: Fixed tags, or None to sample them

    Returns:
        DepTree
    """
    heads = random_heads(n, rng)
    tags = list(tags) if tags is not None else random_tags(n, rng)
    tokens = []
    for i in range(1, n + 1):
        tag = tags[i - 1]
        if heads[i - 1] == 0:
            deprel = "root"
        else:
            choices = DEPRELS_BY_TAG.get(tag, ("dep",))
            deprel = str(choices[rng.integers(0, len(choices))])
        tokens.append(Token(index=i, form=_form_for(tag, rng), upos=tag, head=heads[i - 1], deprel=deprel))
    return DepTree(tokens=tuple(tokens), comments=(f"# sent_id = synth-{n}-{rng.integers(0, 1 << 30)}",))


def synthetic_treebank(n_tokens: int, seed: int = 0, max_len: int = 15, name: str = "synthetic") -> Treebank:
    """
    Random treebank with exactly n_tokens tokens

    Args:
        n_tokens: Total token count
        seed: Generator seed
        max_len: Longest sentence
        name: Treebank name

    Returns:
        Treebank
    """
    rng = np.random.default_rng(seed)
    sentences = []
    remaining = n_tokens
    while remaining > 0:
        n = min(int(rng.integers(1, max_len + 1)), remaining)
        sentences.append(random_tree(n, rng))
        remaining -= n
    return Treebank(sentences=tuple(sentences), name=name)


def simulate_tagger(
    tb: Treebank,
    seed: int = 0,
    error_rates: Optional[Dict[str, float]] = None,
    confusions: Optional[Dict[str, Dict[str, float]]] = None
) -> List[List[str]]:
    """
    Predicted tags from a tagger with a fixed confusion structure

    Args:
        tb: Gold treebank
        seed: Generator seed
        error_rates: p(error | tag), defaults to ERROR_RATES
        confusions: p(wrong tag | tag, error), defaults to CONFUSIONS

    Returns:
        One predicted tag sequence per sentence
    """
    rng = np.random.default_rng(seed)
    error_rates = error_rates or ERROR_RATES
    confusions = confusions or CONFUSIONS
    predicted = []
    for sentence in tb:
        row = []
        for tag in sentence.tags:
            options = confusions.get(tag)
            if options and rng.random() < error_rates.get(tag, 0.0):
                wrong = sorted(options)
                row.append(str(rng.choice(wrong, p=[options[w] for w in wrong])))
            else:
                row.append(tag)
        predicted.append(row)
    return predicted
