from dataclasses import dataclass
from pathlib import Path

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_INVALID = 2
EXIT_DEGENERATE = 3
EXIT_VERIFICATION = 4


@dataclass(frozen=True)
class RunOutcome:
    """Exit status of a run and the report files it wrote."""

    exit_code: int
    files: tuple[Path, ...] = ()
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK

    def to_record(self) -> dict:
        return {
            "status": "ok" if self.ok else "failed",
            "exit_code": self.exit_code,
            "files": [str(path) for path in self.files],
            "message": self.message,
        }
