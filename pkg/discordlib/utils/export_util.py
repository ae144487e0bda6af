# SPDX-License-Identifier: MIT

"""CSV and JSON export of trajectory and sweep tables."""

import json
import math
from pathlib import Path
from typing import Any

import pandas as pd
from pydantic import BaseModel

from discordlib import constants as constant
from discordlib.enums import OutputFormatEnum
from discordlib.logging import logger


def round_significant(value: Any, digits: int = 12) -> Any:
    """Round every float inside ``value`` to ``digits`` significant digits."""
    if isinstance(value, float):
        if not math.isfinite(value):
            return value
        return float(f"{value:.{digits}g}")
    if isinstance(value, dict):
        return {k: round_significant(v, digits) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [round_significant(v, digits) for v in value]
    return value


class TableExporter:
    """Writes fixed-column tables with deterministic float formatting."""

    def __init__(
        self,
        columns: tuple[str, ...] | list[str],
        float_format: str = constant.FLOAT_FORMAT,
    ):
        self.columns = list(columns)
        self.float_format = float_format

    def _prepare_dataframe(self, frame: pd.DataFrame | None) -> pd.DataFrame:
        """Restrict ``frame`` to the exporter columns, in order."""
        if frame is None or frame.empty:
            return pd.DataFrame(columns=self.columns)
        missing = [c for c in self.columns if c not in frame.columns]
        if missing:
            raise ValueError(f"table is missing columns {missing}")
        return frame[self.columns]

    def to_csv(self, frame: pd.DataFrame | None) -> str:
        df = self._prepare_dataframe(frame)
        return df.to_csv(index=False, float_format=self.float_format, lineterminator="\n")

    def to_records(self, frame: pd.DataFrame | None) -> list[dict[str, Any]]:
        df = self._prepare_dataframe(frame).astype(object)
        df = df.where(pd.notna(df), None)
        return round_significant(df.to_dict(orient="records"))

    def export(
        self,
        frame: pd.DataFrame | None,
        path: str | Path,
        fmt: OutputFormatEnum = OutputFormatEnum.CSV,
    ) -> Path:
        """Write the table to ``path`` as CSV or as a JSON list of rows."""
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            if OutputFormatEnum(fmt) == OutputFormatEnum.CSV:
                target.write_text(self.to_csv(frame), encoding="utf-8")
            else:
                write_json(self.to_records(frame), target)
        except OSError as e:
            logger.error(f"Failed to export table to {target}: {e}")
            raise
        logger.info(f"wrote {target}")
        return target


def write_json(payload: BaseModel | dict | list, path: str | Path) -> Path:
    """Write a model (camelCase aliases) or plain data as indented JSON."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json", by_alias=True)
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(round_significant(payload), indent=2, sort_keys=False)
    target.write_text(text + "\n", encoding="utf-8")
    return target


def summary_path(out: str | Path) -> Path:
    """``<stem>.summary.json`` next to ``out``."""
    out = Path(out)
    return out.with_name(f"{out.stem}.summary.json")


trajectory_exporter = TableExporter(constant.TRAJECTORY_COLUMNS)
sweep_exporter = TableExporter(constant.SWEEP_COLUMNS)
