"""
STEP 2: Demo workflow on a synthetic corpus

Writes a synthetic treebank, re-splits it 60/10/30, simulates an external
tagger on the test split and runs config/sweep.yaml over the result.
"""

import sys
from pathlib import Path
import logging

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config import setup_logging
from src.encodings import round_trip_rates
from src.experiments import load_sweep_config, run_sweep
from src.treebank import resplit, treebank_stats, write_conllu_file
from src.treebank.synthetic import simulate_tagger, synthetic_treebank

setup_logging()
logger = logging.getLogger(__name__)

CORPUS_TOKENS = 20000
CORPUS_SEED = 2024


def write_predictions(tb, tags, path: Path):
    """STEP 2.1: Save simulated tags as form<TAB>upos blocks"""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        for sentence, sentence_tags in zip(tb, tags):
            for form, tag in zip(sentence.forms, sentence_tags):
                f.write(f"{form}\t{tag}\n")
            f.write("\n")
    logger.info(f"Saved simulated predictions to {path}")


def main():
    """STEP 2.2: Build the corpus and run the sweep"""

    base_dir = Path(__file__).parent.parent
    data_dir = base_dir / 'data' / 'synthetic'
    config_path = base_dir / 'config' / 'sweep.yaml'

    logger.info("=" * 50)
    logger.info("LINTAGLAB: SYNTHETIC ACCURACY SWEEP")
    logger.info("=" * 50)

    # ===== STEP 1: Corpus and splits =====
    logger.info("\n[1/4] Generating synthetic treebank...")
    corpus = synthetic_treebank(CORPUS_TOKENS, seed=CORPUS_SEED, name="synthetic")
    train, dev, test = resplit(corpus, seed=CORPUS_SEED)
    for split in (train, dev, test):
        write_conllu_file(split, data_dir / f"{split.name}.conllu")

    # ===== STEP 2: Linearization coverage =====
    logger.info("\n[2/4] Checking gold round trips...")
    stats = treebank_stats(test)
    logger.info(f"Test split: {stats.trees} trees, {stats.projective_ratio:.1%} projective")
    for name, rate in round_trip_rates(test).items():
        logger.info(f"  {name}: exact {rate['exact_rate']:.4f}, arcs {rate['arc_rate']:.4f}")

    # ===== STEP 3: Simulated external tagger =====
    logger.info("\n[3/4] Simulating tagger output on test...")
    write_predictions(test, simulate_tagger(test, seed=CORPUS_SEED + 1), data_dir / 'synthetic-test.pred.tsv')

    # ===== STEP 4: Sweep =====
    logger.info("\n[4/4] Running sweep...")
    config = load_sweep_config(config_path)
    report = run_sweep(config)

    # ===== SUMMARY =====
    logger.info("\n" + "=" * 50)
    logger.info("SWEEP COMPLETE!")
    logger.info("=" * 50)
    logger.info(f"Rows: {len(report)} ({len(report.errors)} errors)")
    logger.info(f"Results saved to: {config.output}")
    for row in report.curves().itertuples(index=False):
        logger.info(f"  {row.encoding:6s} A={row.target_acc:.3f}  UAS={row.uas:.4f}  LAS={row.las:.4f}")


if __name__ == "__main__":
    main()
