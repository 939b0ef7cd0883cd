"""
Tag error modelling, controlled corruption and the baseline tagger
"""

from .baseline_tagger import BaselineTagger, TaggerModel, modal_tag, tag, train_tagger
from .corruption import (
    DEFAULT_GRID,
    CorruptionPlan,
    CorruptionResult,
    PlanMode,
    TagCorrupter,
    build_plan,
    corrupt,
    expected_error_counts,
    tagging_accuracy,
    target_error_count,
)
from .error_model import ErrorModel, fit_error_model
from .predictions import parse_predictions, read_predictions

__all__ = [
    # Error model
    "ErrorModel",
    "fit_error_model",

    # Corruption
    "DEFAULT_GRID",
    "PlanMode",
    "CorruptionPlan",
    "CorruptionResult",
    "TagCorrupter",
    "build_plan",
    "corrupt",
    "expected_error_counts",
    "tagging_accuracy",
    "target_error_count",

    # Baseline tagger
    "TaggerModel",
    "BaselineTagger",
    "modal_tag",
    "train_tagger",
    "tag",

    # Predictions
    "parse_predictions",
    "read_predictions",
]
