import json
import logging
import os
from abc import ABC, abstractmethod

import jsonlines
from pydantic import BaseModel

logger = logging.getLogger(__name__)


class TraceWriter(ABC):
    """Abstract base for persisting documents produced by a run."""

    @abstractmethod
    def write(self, document: BaseModel, file_name: str) -> str:
        """Persist the document and return where it went."""
        pass


class LocalWriter(TraceWriter):
    """Writes documents as indented JSON files under a local directory."""

    def __init__(self, local_dir: str):
        self.local_dir = local_dir or "."
        if not os.path.exists(self.local_dir):
            logger.info(f"Creating local directory for reports: {self.local_dir}")
            os.makedirs(self.local_dir)

    def write(self, document: BaseModel, file_name: str) -> str:
        name = file_name if file_name.endswith(".json") else f"{file_name}.json"
        path = os.path.join(self.local_dir, name)
        with open(path, "w") as f:
            json.dump(document.model_dump(mode="json", by_alias=True), f, indent=4)
        logger.info(f"Wrote report to local path: {path}")
        return path


class SampleLogWriter:
    """Appends one JSON object per line, so partial runs keep finished samples."""

    def __init__(self, path: str):
        self.path = path
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)

    def append(self, record: BaseModel):
        with jsonlines.open(self.path, mode="a") as writer:
            writer.write(record.model_dump(mode="json", by_alias=True))

    def read(self, model_class):
        with jsonlines.open(self.path) as reader:
            return [model_class.model_validate(obj) for obj in reader]
