"""
Accuracy sweeps over corrupted PoS tags
"""

from .config import SweepConfig, TreebankSource, load_sweep_config, sweep_config_from_dict
from .report import CSV_COLUMNS, SweepReport, SweepRow
from .seeding import derive_seed
from .sweep import PreparedTreebank, SweepCell, SweepRunner, run_cell, run_sweep

__all__ = [
    # Configuration
    "SweepConfig",
    "TreebankSource",
    "load_sweep_config",
    "sweep_config_from_dict",
    "derive_seed",

    # Running
    "PreparedTreebank",
    "SweepCell",
    "SweepRunner",
    "run_cell",
    "run_sweep",

    # Report
    "CSV_COLUMNS",
    "SweepRow",
    "SweepReport",
]
