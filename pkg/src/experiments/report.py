"""
Sweep report: one row per (treebank, encoding, accuracy, seed) and mean curves
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["treebank", "encoding", "target_acc", "achieved_acc", "seed", "uas", "las", "repairs"]
FLOAT_FORMAT = "%.6f"
ERROR_MARKER = "error"


@dataclass(frozen=True)
class SweepRow:
    treebank: str
    encoding: str
    target_acc: float
    seed: int
    achieved_acc: Optional[float] = None
    uas: Optional[float] = None
    las: Optional[float] = None
    repairs: Optional[int] = None
    repair_detail: Dict[str, int] = field(default_factory=dict)
    resource_group: str = ""
    error: Optional[str] = None

    @property
    def sort_key(self):
        return self.treebank, self.encoding, self.target_acc, self.seed

    @property
    def failed(self) -> bool:
        return self.error is not None

    def to_record(self) -> dict:
        """CSV record; failed rows carry the error marker in the repairs column"""
        return {
            "treebank": self.treebank,
            "encoding": self.encoding,
            "target_acc": self.target_acc,
            "achieved_acc": self.achieved_acc,
            "seed": self.seed,
            "uas": self.uas,
            "las": self.las,
            "repairs": f"{ERROR_MARKER}: {self.error}" if self.failed else self.repairs,
        }


class SweepReport:
    """Sorted sweep rows plus aggregation and file output"""

    def __init__(self, rows: List[SweepRow], config: Optional[dict] = None):
        self.rows = sorted(rows, key=lambda row: row.sort_key)
        self.config = config or {}
        self.logger = logging.getLogger(self.__class__.__name__)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def errors(self) -> List[SweepRow]:
        return [row for row in self.rows if row.failed]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([row.to_record() for row in self.rows], columns=CSV_COLUMNS)

    def _scored_frame(self) -> pd.DataFrame:
        scored = [row for row in self.rows if not row.failed]
        return pd.DataFrame(
            [{**row.to_record(), "resource_group": row.resource_group} for row in scored],
            columns=CSV_COLUMNS + ["resource_group"],
        )

    def curves(self, by: Optional[List[str]] = None) -> pd.DataFrame:
        """
        Mean scores per grid point

        Args:
            by: Grouping columns before target_acc, ["encoding"] by default

        Returns:
            DataFrame with mean achieved_acc, uas, las and the row count n
        """
        by = (by or ["encoding"]) + ["target_acc"]
        frame = self._scored_frame()
        if frame.empty:
            return pd.DataFrame(columns=by + ["achieved_acc", "uas", "las", "n"])
        for column in ("achieved_acc", "uas", "las"):
            frame[column] = frame[column].astype(float)
        grouped = frame.groupby(by, sort=True)
        curves = grouped[["achieved_acc", "uas", "las"]].mean()
        curves["n"] = grouped.size()
        return curves.reset_index()

    def group_curves(self) -> pd.DataFrame:
        return self.curves(by=["resource_group", "encoding"])

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "rows": [
                {**asdict(row), "repair_detail": dict(sorted(row.repair_detail.items()))}
                for row in self.rows
            ],
            "curves": self.curves().to_dict(orient="records"),
            "group_curves": self.group_curves().to_dict(orient="records"),
            "errors": len(self.errors),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, default=str)

    def save(self, output: Path) -> Dict[str, Path]:
        """
        Write sweep.csv, sweep.json and curves.csv

        Args:
            output: Directory to write into

        Returns:
            Mapping of artifact name to path
        """
        output = Path(output)
        output.mkdir(parents=True, exist_ok=True)
        paths = {
            "csv": output / "sweep.csv",
            "json": output / "sweep.json",
            "curves": output / "curves.csv",
        }
        with open(paths["csv"], 'w', encoding='utf-8', newline='') as f:
            f.write(self.to_csv())
        with open(paths["json"], 'w', encoding='utf-8') as f:
            f.write(self.to_json())
        with open(paths["curves"], 'w', encoding='utf-8', newline='') as f:
            f.write(self.curves().to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n"))
        self.logger.info(f"Saved {len(self.rows)} sweep rows ({len(self.errors)} errors) to {output}")
        return paths
