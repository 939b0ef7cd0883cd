"""
Sweep configuration

A YAML (or JSON) document validated with pydantic. Relative paths are
resolved against the directory of the configuration file.
"""

import logging
from pathlib import Path
from typing import Dict, List, Literal, Optional

import pydantic
import yaml

from ..config import get_settings
from ..encodings import EncodingId
from ..errors import ConfigError
from ..tagging import DEFAULT_GRID

logger = logging.getLogger(__name__)

BASELINE_TAGGER = "baseline-tagger"
EXTERNAL = "external"


class TreebankSource(pydantic.BaseModel):
    """
    Files of one treebank

    labels maps an encoding id to a predicted label file used instead of the
    gold-encoded labels; '{accuracy}' and '{seed}' in the path are filled
    per sweep cell.
    """

    name: str
    test: Path
    train: Optional[Path] = None
    dev: Optional[Path] = None
    predictions: Optional[Path] = None
    labels: Dict[EncodingId, str] = pydantic.Field(default_factory=dict)

    def resolve(self, base: Path) -> "TreebankSource":
        def fix(path: Optional[Path]) -> Optional[Path]:
            return path if path is None or path.is_absolute() else base / path

        labels = {
            encoding: path if Path(path).is_absolute() else str(base / path)
            for encoding, path in self.labels.items()
        }
        return self.model_copy(update={
            "test": fix(self.test), "train": fix(self.train), "dev": fix(self.dev),
            "predictions": fix(self.predictions), "labels": labels,
        })


class SweepConfig(pydantic.BaseModel):
    treebanks: List[TreebankSource]
    encodings: List[EncodingId] = pydantic.Field(default_factory=lambda: list(EncodingId))
    grid: List[float] = pydantic.Field(default_factory=lambda: list(DEFAULT_GRID))
    seeds: List[int] = pydantic.Field(default_factory=lambda: [1])
    tolerance: float = pydantic.Field(default_factory=lambda: get_settings().tolerance)
    max_attempts: int = pydantic.Field(default_factory=lambda: get_settings().max_attempts)
    calibration: Literal["baseline-tagger", "external"] = BASELINE_TAGGER
    master_seed: int = 0
    workers: int = pydantic.Field(default_factory=lambda: get_settings().workers)
    output: Path = Path("results/sweep")
    write_corrupted: bool = False

    @pydantic.field_validator("treebanks")
    @classmethod
    def _has_treebanks(cls, value: List[TreebankSource]) -> List[TreebankSource]:
        if not value:
            raise ValueError("at least one treebank is required")
        names = [source.name for source in value]
        if len(set(names)) != len(names):
            raise ValueError(f"treebank names must be unique: {names}")
        return value

    @pydantic.field_validator("encodings")
    @classmethod
    def _has_encodings(cls, value: List[EncodingId]) -> List[EncodingId]:
        if not value:
            raise ValueError("at least one encoding is required")
        return list(dict.fromkeys(value))

    @pydantic.field_validator("grid")
    @classmethod
    def _grid_in_range(cls, value: List[float]) -> List[float]:
        if not value:
            raise ValueError("the accuracy grid is empty")
        bad = [a for a in value if not 0.0 <= a <= 1.0]
        if bad:
            raise ValueError(f"grid values must lie in [0, 1]: {bad}")
        return sorted(set(value))

    @pydantic.field_validator("seeds")
    @classmethod
    def _has_seeds(cls, value: List[int]) -> List[int]:
        if not value:
            raise ValueError("at least one seed is required")
        return list(dict.fromkeys(value))

    @pydantic.field_validator("tolerance")
    @classmethod
    def _tolerance_positive(cls, value: float) -> float:
        if value < 0:
            raise ValueError("tolerance must be non-negative")
        return value

    @pydantic.field_validator("max_attempts", "workers")
    @classmethod
    def _at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @pydantic.model_validator(mode="after")
    def _calibration_inputs(self) -> "SweepConfig":
        for source in self.treebanks:
            if self.calibration == EXTERNAL and source.predictions is None:
                raise ValueError(f"treebank {source.name}: external calibration needs a predictions file")
            if self.calibration == BASELINE_TAGGER and source.train is None:
                raise ValueError(f"treebank {source.name}: the baseline tagger needs a train file")
        return self


def sweep_config_from_dict(data: dict, base: Optional[Path] = None) -> SweepConfig:
    """
    Validate a configuration mapping

    Args:
        data: Parsed document
        base: Directory relative paths are resolved against

    Returns:
        SweepConfig

    Raises:
        ConfigError: On any validation failure
    """
    if not isinstance(data, dict):
        raise ConfigError("sweep configuration must be a mapping")
    try:
        config = SweepConfig(**data)
    except pydantic.ValidationError as e:
        raise ConfigError(f"invalid sweep configuration: {e}") from None
    if base is not None:
        config = config.model_copy(update={
            "treebanks": [source.resolve(base) for source in config.treebanks],
            "output": config.output if config.output.is_absolute() else base / config.output,
        })
    return config


def load_sweep_config(path: Path) -> SweepConfig:
    """Read a YAML/JSON sweep configuration file"""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as e:
        raise ConfigError(f"cannot read sweep configuration {path}: {e}") from None
    config = sweep_config_from_dict(data, base=path.parent)
    logger.info(
        f"Loaded sweep config from {path}: {len(config.treebanks)} treebanks, "
        f"{len(config.encodings)} encodings, {len(config.grid)} grid points, {len(config.seeds)} seeds"
    )
    return config
