"""
Accuracy sweep: fit error model -> corrupt test tags -> decode -> score

One cell per (treebank, target accuracy, seed). Each cell corrupts the test
split once and decodes it with every configured encoding, so a cell yields
one row per encoding. Decoding starts from the gold-encoded labels (oracle
robustness) unless a predicted label file is configured for the encoding.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from ..config import get_settings
from ..encodings import EncodedSentence, EncodingId, get_encoding, read_label_file
from ..errors import DataError, LinTagLabError
from ..evals import attachment_scores
from ..tagging import ErrorModel, TagCorrupter, build_plan, fit_error_model, read_predictions
from ..tagging.baseline_tagger import BaselineTagger
from ..treebank import Treebank, read_conllu, resource_group, write_conllu_file
from .config import EXTERNAL, SweepConfig, TreebankSource
from .report import SweepReport, SweepRow
from .seeding import derive_seed

logger = logging.getLogger(__name__)


@dataclass
class PreparedTreebank:
    """Everything a cell needs from one treebank, computed once"""

    name: str
    test: Treebank
    model: ErrorModel
    group: str
    gold_encoded: Dict[EncodingId, List[EncodedSentence]] = field(default_factory=dict)
    label_paths: Dict[EncodingId, str] = field(default_factory=dict)
    train: Optional[Treebank] = None
    dev: Optional[Treebank] = None


@dataclass(frozen=True)
class SweepCell:
    treebank: str
    accuracy: float
    seed: int
    cell_seed: int


def _error_rows(prepared: PreparedTreebank, cell: SweepCell, encodings, message: str) -> List[SweepRow]:
    return [
        SweepRow(
            treebank=prepared.name, encoding=EncodingId(e).value, target_acc=cell.accuracy, seed=cell.seed,
            resource_group=prepared.group, error=message,
        )
        for e in encodings
    ]


def _encoding_for(encoding_id: EncodingId):
    # Non-projective trees are lifted so arc-hybrid covers whole treebanks
    if encoding_id == EncodingId.ARC_HYBRID:
        return get_encoding(encoding_id, projectivize=True)
    return get_encoding(encoding_id)


def _write_corrupted(
    prepared: PreparedTreebank,
    cell: SweepCell,
    corrupter: TagCorrupter,
    plan,
    corrupted_test: Treebank,
    output: Path
):
    folder = Path(output) / "corrupted" / prepared.name / f"{cell.accuracy:.3f}" / f"seed{cell.seed}"
    write_conllu_file(corrupted_test, folder / "test.conllu")
    for split_name, split in (("train", prepared.train), ("dev", prepared.dev)):
        if split is None:
            continue
        try:
            result = corrupter.corrupt(split, plan, seed=cell.cell_seed, calibration=False)
        except LinTagLabError as e:
            logger.warning(f"Not writing corrupted {split_name} for {prepared.name} A={cell.accuracy}: {e}")
            continue
        write_conllu_file(result.treebank, folder / f"{split_name}.conllu")


def run_cell(
    prepared: PreparedTreebank,
    cell: SweepCell,
    encodings: List[EncodingId],
    tolerance: float,
    max_attempts: int,
    corrupted_output: Optional[Path] = None
) -> List[SweepRow]:
    """
    Corrupt one treebank's test tags and score every encoding

    Args:
        prepared: Treebank with fitted error model and gold encodings
        cell: Grid point and seeds
        encodings: Encodings to score
        tolerance: Relative tolerance on the target error count
        max_attempts: Reseeded sampling attempts
        corrupted_output: Directory for corrupted CoNLL-U files, or None

    Returns:
        One SweepRow per encoding; failures become marked rows
    """
    corrupter = TagCorrupter(prepared.model, tolerance=tolerance, max_attempts=max_attempts)
    try:
        plan = build_plan(prepared.model, cell.accuracy)
        corruption = corrupter.corrupt(prepared.test, plan, seed=cell.cell_seed, calibration=True)
    except LinTagLabError as e:
        logger.warning(f"{prepared.name} A={cell.accuracy} seed={cell.seed}: {e}")
        return _error_rows(prepared, cell, encodings, f"{type(e).__name__}: {e}")

    if corrupted_output is not None:
        _write_corrupted(prepared, cell, corrupter, plan, corruption.treebank, corrupted_output)

    corrupted_tags = corruption.treebank.tags()
    rows = []
    for encoding_id in encodings:
        try:
            encoding = _encoding_for(encoding_id)
            label_path = prepared.label_paths.get(encoding_id)
            if label_path is not None:
                path = label_path.format(accuracy=f"{cell.accuracy:.3f}", seed=cell.seed)
                encoded = [s.encoded for s in read_label_file(Path(path), encoding_id)]
            else:
                encoded = prepared.gold_encoded[encoding_id]
            decoded, repairs = encoding.decode_treebank(encoded, corruption.treebank, tags=corrupted_tags)
            scores = attachment_scores(prepared.test, decoded, repairs=repairs)
        except (LinTagLabError, OSError) as e:
            logger.warning(f"{prepared.name} {encoding_id.value} A={cell.accuracy} seed={cell.seed}: {e}")
            rows.extend(_error_rows(prepared, cell, [encoding_id], f"{type(e).__name__}: {e}"))
            continue
        rows.append(SweepRow(
            treebank=prepared.name,
            encoding=encoding_id.value,
            target_acc=cell.accuracy,
            seed=cell.seed,
            achieved_acc=corruption.achieved_accuracy,
            uas=scores.uas,
            las=scores.las,
            repairs=scores.repairs.total,
            repair_detail=scores.repairs.to_dict(),
            resource_group=prepared.group,
        ))
    return rows


def _run_cell_job(job: Tuple) -> List[SweepRow]:
    return run_cell(*job)


class SweepRunner:
    """Runs a SweepConfig end to end"""

    def __init__(self, config: SweepConfig, progress: Optional[bool] = None):
        """
        STEP 1.1: Initialize runner

        Args:
            config: Validated sweep configuration
            progress: Show progress bars (defaults to LINTAGLAB_PROGRESS)
        """
        self.config = config
        self.progress = get_settings().progress if progress is None else progress
        self.logger = logging.getLogger(self.__class__.__name__)

    def calibrate(self, source: TreebankSource, test: Treebank, train: Optional[Treebank]) -> ErrorModel:
        """
        STEP 1.2: Fit the error model on the test split

        Args:
            source: Treebank files
            test: Gold test split
            train: Gold train split (baseline tagger only)

        Returns:
            ErrorModel with real-error positions on test
        """
        if self.config.calibration == EXTERNAL:
            predicted = read_predictions(source.predictions, test)
        else:
            tagger = BaselineTagger(progress=self.progress)
            tagger.train(train)
            predicted = tagger.tag(test)
        return fit_error_model(test, predicted)

    def prepare(self, source: TreebankSource) -> PreparedTreebank:
        """
        STEP 1.3: Load splits, fit the error model and gold-encode the test split

        Args:
            source: Treebank files

        Returns:
            PreparedTreebank
        """
        test = read_conllu(source.test, name=source.name)
        train = read_conllu(source.train, name=f"{source.name}-train") if source.train else None
        dev = read_conllu(source.dev, name=f"{source.name}-dev") if source.dev else None
        model = self.calibrate(source, test, train)
        group = resource_group(len(train) if train is not None else len(test))

        gold_encoded = {}
        for encoding_id in self.config.encodings:
            if encoding_id in source.labels:
                continue
            gold_encoded[encoding_id] = _encoding_for(encoding_id).encode_treebank(test)

        self.logger.info(f"Prepared {source.name}: {len(test)} test sentences, resource group {group}")
        return PreparedTreebank(
            name=source.name, test=test, model=model, group=group, gold_encoded=gold_encoded,
            label_paths=dict(source.labels), train=train, dev=dev,
        )

    def cells(self, name: str) -> List[SweepCell]:
        return [
            SweepCell(name, accuracy, seed, derive_seed(self.config.master_seed, name, accuracy, seed))
            for accuracy in self.config.grid
            for seed in self.config.seeds
        ]

    def run(self) -> SweepReport:
        """
        STEP 1.4: Run every cell and collect the report

        Returns:
            SweepReport sorted by (treebank, encoding, target accuracy, seed)
        """
        corrupted_output = self.config.output if self.config.write_corrupted else None
        jobs = []
        rows: List[SweepRow] = []
        for source in self.config.treebanks:
            try:
                prepared = self.prepare(source)
            except (DataError, OSError) as e:
                self.logger.error(f"Skipping treebank {source.name}: {e}")
                placeholder = PreparedTreebank(
                    name=source.name, test=Treebank(()), model=ErrorModel({}, {}, {}), group=""
                )
                for cell in self.cells(source.name):
                    rows.extend(_error_rows(
                        placeholder, cell, self.config.encodings, f"{type(e).__name__}: {e}"
                    ))
                continue
            jobs.extend(
                (prepared, cell, self.config.encodings, self.config.tolerance,
                 self.config.max_attempts, corrupted_output)
                for cell in self.cells(source.name)
            )

        self.logger.info(f"Running {len(jobs)} sweep cells with {self.config.workers} workers")
        if self.config.workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=self.config.workers) as executor:
                results = executor.map(_run_cell_job, jobs)
                for cell_rows in tqdm(results, total=len(jobs), desc="Sweep", disable=not self.progress):
                    rows.extend(cell_rows)
        else:
            for job in tqdm(jobs, desc="Sweep", disable=not self.progress):
                rows.extend(_run_cell_job(job))

        report = SweepReport(rows, config=self.config.model_dump(mode="json"))
        self.logger.info(f"Sweep finished: {len(report)} rows, {len(report.errors)} errors")
        return report


def run_sweep(config: SweepConfig, save: bool = True, progress: Optional[bool] = None) -> SweepReport:
    """
    Run a sweep and optionally write its artifacts to config.output

    Args:
        config: Validated sweep configuration
        save: Write sweep.csv, sweep.json and curves.csv
        progress: Show progress bars

    Returns:
        SweepReport
    """
    report = SweepRunner(config, progress=progress).run()
    if save:
        report.save(config.output)
    return report
