# SPDX-License-Identifier: MIT
"""YAML configuration files and their environment overlays."""

from pathlib import Path
from typing import Any

import yaml

from discordlib import constants as constant
from discordlib.config import utils as config_util


class ConfigLoader:
    """
    Reads a base YAML file and merges ``<stem>-<env><suffix>`` next to it.

    ``config.yml`` with env ``test`` is overlaid by ``config-test.yml``.
    A missing overlay counts as an empty document, and so does a missing
    packaged default; a missing explicit file is an error. ``sources`` lists
    the files that were actually read, base first.
    """

    def __init__(self, env: str, base_config_file: str | Path | None = None) -> None:
        if not env:
            raise ValueError("Environment must be specified")
        self.env = env
        self.explicit = base_config_file is not None
        self.base_file = (
            Path(base_config_file)
            if base_config_file is not None
            else Path(constant.RESOURCE_DIR) / constant.CONFIG_FILE_NAME
        )
        self.sources: list[Path] = []

    @property
    def overlay_file(self) -> Path:
        return self.base_file.with_name(
            f"{self.base_file.stem}-{self.env}{self.base_file.suffix}"
        )

    @staticmethod
    def read_document(path: Path) -> dict[str, Any]:
        """
        Parse one YAML file into a mapping of sections.

        Raises:
            ValueError: If the file is not valid YAML or its top level is not
                a mapping.
        """
        try:
            document = yaml.safe_load(path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            raise ValueError(f"Error parsing YAML file {path}: {e}") from e
        if document is None:
            return {}
        if not isinstance(document, dict):
            raise ValueError(f"{path} must contain a mapping of sections")
        return document

    def load_config(self) -> dict[str, Any]:
        """Base document merged with the environment overlay."""
        self.sources = []
        merged: dict[str, Any] = {}
        if self.explicit and not self.base_file.is_file():
            raise ValueError(f"config file {self.base_file} does not exist")
        for path in (self.base_file, self.overlay_file):
            if not path.is_file():
                continue
            merged = config_util.deep_merge_dict(merged, self.read_document(path))
            self.sources.append(path)
        return merged
