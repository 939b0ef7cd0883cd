"""
Seed derivation for sweep cells

Each cell gets its own stream from (master seed, treebank, accuracy, seed),
so results do not depend on which worker runs a cell or in what order.
"""

import hashlib

import numpy as np


def derive_seed(master_seed: int, treebank: str, accuracy: float, seed: int) -> int:
    """
    Args:
        master_seed: Sweep-wide seed
        treebank: Treebank name
        accuracy: Target accuracy of the cell
        seed: Seed index from the configuration

    Returns:
        A 32-bit seed
    """
    key = f"{master_seed}|{treebank}|{accuracy:.6f}|{seed}".encode("utf-8")
    entropy = int.from_bytes(hashlib.sha256(key).digest()[:16], "big")
    return int(np.random.SeedSequence(entropy).generate_state(1)[0])
