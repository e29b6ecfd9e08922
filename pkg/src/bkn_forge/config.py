"""Run settings shared by the catalog runner and the CLI."""
from __future__ import annotations

import os
from dataclasses import dataclass

THREADS_ENV = "BKN_FORGE_THREADS"


@dataclass(frozen=True)
class RunConfig:
    parallel: bool = False
    workers: int | None = None  # None: $BKN_FORGE_THREADS, else the CPU count
    hilbert: bool = False       # add the Hilbert basis of ξ_λ to monoid certificates
    timings: bool = True        # include timing fields in JSON reports
    output_format: str = "text"

    def __post_init__(self):
        if self.output_format not in ("text", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be positive")

    def worker_count(self) -> int:
        if self.workers is not None:
            return self.workers
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                return max(1, int(env))
            except ValueError:
                pass
        return os.cpu_count() or 1
