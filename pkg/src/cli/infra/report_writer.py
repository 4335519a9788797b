import csv
import json
from pathlib import Path
from typing import Any, Iterable, Sequence


class ReportWriter:
    """Writes run reports under one output directory, every file name carrying the run prefix."""

    def __init__(self, directory: str | Path, prefix: str):
        self._directory = Path(directory)
        self._prefix = prefix

    @property
    def directory(self) -> Path:
        return self._directory

    def path_for(self, name: str) -> Path:
        return self._directory / f"{self._prefix}_{name}"

    def write_json(self, name: str, payload: Any) -> Path:
        """
        Write a JSON report with sorted keys so identical runs produce identical bytes.

        Args:
            name: File name after the prefix, e.g. "solution.json"
            payload: JSON-serialisable record

        Returns:
            The path written
        """
        path = self.path_for(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2, sort_keys=True)
            handle.write("\n")
        return path

    def write_csv(self, name: str, header: Sequence[str], rows: Iterable[Sequence[float]]) -> Path:
        """Write a CSV table with a header row; floats keep 17 significant digits."""
        path = self.path_for(name)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_float(value) for value in row])
        return path


def format_float(value: float) -> str:
    return format(float(value), ".17g")
