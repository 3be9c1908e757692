import copy
import logging

from pythonjsonlogger import jsonlogger


class Formatter(jsonlogger.JsonFormatter):
    """
    Emits log records as JSON objects with a "severity" field, so that log
    collectors can tell message levels apart.
    """

    def __init__(self, job_aware_formatter=None):
        super().__init__()
        self.job_aware_formatter = job_aware_formatter

    def add_fields(self, log_record, record, message_dict):
        super().add_fields(log_record, record, message_dict)
        log_record["severity"] = record.levelname
        job = getattr(self.job_aware_formatter, "job", "")
        if job:
            log_record["job"] = job

    def format(self, record: logging.LogRecord) -> str:
        if self.job_aware_formatter:
            # other handlers still see the original record
            record = copy.copy(record)
            record.msg = {"message": self.job_aware_formatter.format(record)}
            record.args = ()
        return super().format(record)


class Handler(logging.StreamHandler):
    def __init__(self, stream=None):
        super().__init__(stream)
        self.setFormatter(Formatter())
