"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │        RESULTS REPOSITORY           │
 *  └─────────────────────────────────────┘
 *  File repository for simulation outputs
 *
 *  Writes run, aggregate, sweep and topology CSVs under the
 *  output directory with fixed, scriptable file names.
 *
 *  Parameters:
 *  - out_dir: output directory
 *
 *  Returns:
 *  - ResultsRepository instance
 *
 *  Notes:
 *  - Every write is atomic (temp file + rename)
 *  - The directory is created on first write
 */
"""

import os
import tempfile
from typing import List

from core.models import Protocol, RunSummary
from debugger import debug_info
from metrics import export_csv


class ResultsRepository:
    """
     ┌─────────────────────────────────────┐
     │       RESULTSREPOSITORY             │
     └─────────────────────────────────────┘
     Repository for CSV result files

     Provides atomic writes and the naming scheme
     <protocol>_<seed>.csv for per-run metrics.
    """

    def __init__(self, out_dir: str):
        self.out_dir = out_dir

    def ensure_dir(self) -> None:
        """Create the output directory; raises OSError if impossible"""
        os.makedirs(self.out_dir, exist_ok=True)
        if not os.access(self.out_dir, os.W_OK):
            raise PermissionError(f"output directory is not writable: {self.out_dir}")

    def write_text(self, filename: str, text: str) -> str:
        """
         ┌─────────────────────────────────────┐
         │           WRITE_TEXT                │
         └─────────────────────────────────────┘
         Atomically write a text file in the output directory

         Parameters:
         - filename: name relative to out_dir
         - text: file content

         Returns:
         - Full path of the written file
        """
        self.ensure_dir()
        path = os.path.join(self.out_dir, filename)
        fd, tmp_path = tempfile.mkstemp(dir=self.out_dir, prefix=".tmp-", suffix=".csv")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
                handle.write(text)
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        return path

    def read_text(self, filename: str) -> str:
        with open(os.path.join(self.out_dir, filename), encoding="utf-8", newline="") as handle:
            return handle.read()

    @staticmethod
    def run_filename(protocol: Protocol, seed: int) -> str:
        return f"{protocol.value}_{seed}.csv"

    def save_run(self, summary: RunSummary) -> str:
        """Write the per-round metrics CSV of one run"""
        return self.write_text(self.run_filename(summary.protocol, summary.seed), export_csv(summary))

    def save_runs(self, summaries: List[RunSummary]) -> List[str]:
        paths = [self.save_run(summary) for summary in summaries]
        debug_info(f"Wrote {len(paths)} run CSVs to {self.out_dir}")
        return paths

    def list_files(self) -> List[str]:
        if not os.path.isdir(self.out_dir):
            return []
        return sorted(name for name in os.listdir(self.out_dir) if not name.startswith("."))
