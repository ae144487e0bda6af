import json
import math

import pandas as pd
import pytest

from discordlib.enums import OutputFormatEnum
from discordlib.utils import export_util
from discordlib.utils.export_util import TableExporter


class TestRoundSignificant:
    """Test significant-digit rounding of nested data"""

    def test_nested(self):
        """Test floats inside dicts and lists are rounded"""
        value = {"a": 1 / 3, "b": [2 / 3, "x", 7], "c": None}

        rounded = export_util.round_significant(value)

        assert rounded == {"a": 0.333333333333, "b": [0.666666666667, "x", 7], "c": None}

    def test_non_finite(self):
        """Test infinities pass through"""
        assert export_util.round_significant(math.inf) == math.inf


class TestTableExporter:
    """Test CSV and JSON table export"""

    def setup_method(self):
        self.exporter = TableExporter(("x", "y"))
        self.frame = pd.DataFrame({"y": [0.1 + 0.2, None], "x": [1.0, 2.5], "z": [0, 0]})

    def test_csv_columns_and_format(self):
        """Test column order, %.12g floats and empty cells"""
        text = self.exporter.to_csv(self.frame)

        assert text == "x,y\n1,0.3\n2.5,\n"

    def test_missing_column(self):
        """Test a frame without a required column"""
        with pytest.raises(ValueError, match="missing"):
            self.exporter.to_csv(pd.DataFrame({"x": [1.0]}))

    def test_empty_frame(self):
        """Test an empty frame still writes the header"""
        assert self.exporter.to_csv(None) == "x,y\n"

    def test_json_export(self, tmp_path):
        """Test JSON rows use None for missing values"""
        target = self.exporter.export(self.frame, tmp_path / "out" / "t.json", OutputFormatEnum.JSON)

        rows = json.loads(target.read_text())

        assert rows == [{"x": 1.0, "y": 0.3}, {"x": 2.5, "y": None}]


class TestSummaryPath:
    """Test the sidecar file name"""

    @pytest.mark.parametrize(
        "out,expected",
        [("run/traj.csv", "run/traj.summary.json"), ("traj", "traj.summary.json")],
    )
    def test_name(self, out, expected):
        """Test <stem>.summary.json next to the output"""
        assert export_util.summary_path(out).as_posix() == expected
