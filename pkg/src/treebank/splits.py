"""
Seeded train/dev/test re-splitting of a treebank
"""

import logging
import math
from typing import Sequence, Tuple

import numpy as np

from ..errors import DataError
from .conllu import Treebank

logger = logging.getLogger(__name__)

DEFAULT_RATIOS = (0.6, 0.1, 0.3)


def split_sizes(n: int, ratios: Sequence[float] = DEFAULT_RATIOS) -> Tuple[int, int, int]:
    """Floor-based dev/test sizes; the remainder goes to train"""
    _, dev_ratio, test_ratio = ratios
    # epsilon: products like 0.29 * 100 land just under the integer
    n_dev = math.floor(dev_ratio * n + 1e-9)
    n_test = math.floor(test_ratio * n + 1e-9)
    return n - n_dev - n_test, n_dev, n_test


def resplit(
    tb: Treebank,
    ratios: Sequence[float] = DEFAULT_RATIOS,
    seed: int = 0
) -> Tuple[Treebank, Treebank, Treebank]:
    """
    Shuffle sentences and split them into train/dev/test

    Args:
        tb: Treebank to split (at least 3 sentences)
        ratios: (train, dev, test) fractions summing to 1
        seed: Shuffle seed; the same seed always gives the same partition

    Returns:
        (train, dev, test); each keeps the original sentence order
    """
    if len(ratios) != 3 or any(r < 0 for r in ratios) or not math.isclose(sum(ratios), 1.0, abs_tol=1e-9):
        raise DataError(f"ratios must be three non-negative fractions summing to 1, got {tuple(ratios)}")
    if len(tb) < 3:
        raise DataError(f"need at least 3 sentences to split, got {len(tb)}")

    n_train, n_dev, n_test = split_sizes(len(tb), ratios)
    order = np.random.default_rng(seed).permutation(len(tb))
    train_ids = sorted(order[:n_train].tolist())
    dev_ids = sorted(order[n_train:n_train + n_dev].tolist())
    test_ids = sorted(order[n_train + n_dev:].tolist())

    logger.info(f"Split {tb.name}: train={n_train}, dev={n_dev}, test={n_test} (seed={seed})")
    return (
        tb.with_sentences([tb[i] for i in train_ids], name=f"{tb.name}-train"),
        tb.with_sentences([tb[i] for i in dev_ids], name=f"{tb.name}-dev"),
        tb.with_sentences([tb[i] for i in test_ids], name=f"{tb.name}-test"),
    )
