"""
Output Manager

Writes reports and data files for a run. Every file is written to a
temporary sibling first and moved into place with os.replace, so readers
never observe a partial file. JSON uses sorted keys; CSV is written with
12 significant digits, '.' decimals and LF line endings.
"""

import csv
import io
import json
import logging
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import OutputError
from ..verification.reports import jsonable

logger = logging.getLogger(__name__)


def format_number(value: float) -> str:
    """12 significant digits, locale independent."""
    return f"{float(value):.12g}"


class OutputManager:
    """Manages the output directory and atomic file writes for one run."""

    def __init__(self, output_dir: str = "results"):
        """
        Args:
            output_dir: Directory receiving every file of the run
        """
        self.output_dir = Path(output_dir)
        self.written: List[Path] = []

    def _target(self, name: str) -> Path:
        try:
            self.output_dir.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise OutputError(f"Cannot create output directory {self.output_dir}: {e}") from e
        return self.output_dir / name

    def write_text(self, name: str, content: str) -> Path:
        """
        Atomically write content to output_dir/name.

        Raises:
            OutputError: With the target path on any IO failure
        """
        path = self._target(name)
        tmp_name = None
        try:
            with tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", newline="\n", dir=self.output_dir,
                prefix=f".{path.name}.", suffix=".tmp", delete=False
            ) as handle:
                tmp_name = handle.name
                handle.write(content)
            os.replace(tmp_name, path)
        except OSError as e:
            if tmp_name and os.path.exists(tmp_name):
                os.remove(tmp_name)
            raise OutputError(f"Failed to write {path}: {e}") from e
        self.written.append(path)
        logger.info(f"Wrote {path}")
        return path

    # JSON

    @staticmethod
    def report_document(
        config: Dict[str, Any],
        results: Sequence[Dict[str, Any]],
        wall_time: float,
        created: Optional[str] = None
    ) -> Dict[str, Any]:
        """{"config", "results", "metadata"}; only metadata varies between identical runs."""
        return {
            "config": jsonable(config),
            "results": jsonable(list(results)),
            "metadata": {
                "wall_time": wall_time,
                "created": created or datetime.now(timezone.utc).isoformat(timespec="seconds"),
            },
        }

    def write_json(self, name: str, document: Dict[str, Any]) -> Path:
        content = json.dumps(jsonable(document), indent=2, sort_keys=True) + "\n"
        return self.write_text(name, content)

    # CSV

    @staticmethod
    def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([v if isinstance(v, (int, np.integer, str)) else format_number(v)
                             for v in row])
        return buffer.getvalue()

    def write_texture_csv(
        self,
        name: str,
        coords: np.ndarray,
        expectations: Sequence[Tuple[float, float, float]]
    ) -> Path:
        """
        Header site,n1..nd,sx,sy,sz and one row per site.

        Raises:
            OutputError: If coordinates and expectations disagree in length
        """
        coords = np.atleast_2d(np.asarray(coords, dtype=int))
        if len(coords) != len(expectations):
            raise OutputError(
                f"Texture for {name} has {len(expectations)} rows for {len(coords)} sites"
            )
        header = ["site"] + [f"n{axis + 1}" for axis in range(coords.shape[1])] + ["sx", "sy", "sz"]
        rows = [[j, *map(int, coords[j]), *expectations[j]] for j in range(len(coords))]
        return self.write_text(name, self._csv_text(header, rows))

    def write_spectrum_csv(self, name: str, eigenvalues: Sequence[complex]) -> Path:
        """Header index,re,im, eigenvalues in the given order."""
        rows = [[i, complex(e).real, complex(e).imag] for i, e in enumerate(eigenvalues)]
        return self.write_text(name, self._csv_text(["index", "re", "im"], rows))
