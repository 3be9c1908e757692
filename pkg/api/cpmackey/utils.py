import logging
import os
import sys
from logging import Formatter
from typing import List, Optional, Sequence

from cpmackey import glog
from cpmackey.exceptions import InputError

logger = logging.getLogger(__name__)

JSON_LOG_FORMATS = {"json", "google:json"}


class JobAwareLogFormatter(Formatter):
    """Prefixes every message with the label of the job currently running,
    e.g. the periodicity sample being evaluated."""

    def __init__(self, job: str = ""):
        super().__init__("%(asctime)s - %(name)s - %(levelname)s")
        self.job = job

    def format(self, record):
        og_message = super().format(record)
        job_part = f"[{self.job}] " if self.job else ""
        return f"{og_message} - {job_part}- {record.getMessage()}"


def init_settings(log_level: str = "INFO", logs_dir: Optional[str] = None) -> JobAwareLogFormatter:
    """Route all logging to stderr; stdout stays reserved for command output.

    With LOG_FORMAT=json every record is emitted as a JSON object instead.
    """
    job_fmt = JobAwareLogFormatter()
    if os.getenv("LOG_FORMAT") in JSON_LOG_FORMATS:
        handler = glog.Handler(stream=sys.stderr)
        handler.setFormatter(glog.Formatter(job_fmt))
    else:
        handler = logging.StreamHandler(stream=sys.stderr)
        handler.setFormatter(job_fmt)
    handlers: List[logging.Handler] = [handler]
    if logs_dir:
        os.makedirs(logs_dir, exist_ok=True)
        file_handler = logging.FileHandler(os.path.join(logs_dir, "cpmackey.log"))
        file_handler.setFormatter(job_fmt)
        handlers.append(file_handler)
    logging.basicConfig(level=log_level, handlers=handlers, force=True)
    return job_fmt


def parse_int_list(text: str) -> List[int]:
    """'1, -2,3' -> [1, -2, 3]; the empty string gives []."""
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def parse_matrix(text: str, cols: Optional[int] = None) -> List[List[int]]:
    """Rows separated by ';', entries by ','. '2,0;0,3' -> [[2, 0], [0, 3]]."""
    rows = [parse_int_list(r) for r in text.split(";") if r.strip()]
    if cols is not None and any(len(r) != cols for r in rows):
        raise InputError(f"every row of {text!r} needs {cols} entries")
    return rows


def join_ints(values: Sequence[int]) -> str:
    return ",".join(str(v) for v in values)
