import csv
import json
import math
import os
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    TextIO,
    Tuple,
    Union,
)

import numpy as np

from adapters.loggers.logger_adapter import app_logger

PathLike = Union[str, Path]


def format_number(value: Any) -> str:
    """Shortest round-trip text for numbers, independent of locale."""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if value is None:
        return ""
    return str(value)


def json_safe(value: Any) -> Any:
    """Plain JSON types; non-finite floats become the strings inf, -inf and nan."""
    if isinstance(value, dict):
        return {str(key): json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    if isinstance(value, np.ndarray):
        return json_safe(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    return value


def _discard(temp_name: str) -> None:
    try:
        os.unlink(temp_name)
    except OSError:
        pass


def companion_path(path: PathLike, suffix: str) -> Path:
    """``out.csv`` -> ``out<suffix>``; paths without a suffix get it appended."""
    path = Path(path)
    if path.suffix:
        return path.with_suffix(suffix)
    return path.with_name(path.name + suffix)


class ResultWriter:
    """Writes result files atomically: a temporary file renamed on success."""

    def __init__(self) -> None:
        self._staged: Optional[List[Tuple[str, Path]]] = None

    @contextmanager
    def batch(self) -> Iterator["ResultWriter"]:
        """Writer whose files are renamed into place together on a clean exit."""
        batch = ResultWriter()
        batch._staged = []
        try:
            yield batch
        except BaseException:
            for temp_name, _ in batch._staged:
                _discard(temp_name)
            raise
        for temp_name, path in batch._staged:
            os.replace(temp_name, path)
        app_logger.debug("Committed %d result files", len(batch._staged))

    def write_csv(
        self, path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> Path:
        path = Path(path)
        with self._atomic(path) as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow([format_number(value) for value in row])
                count += 1
        app_logger.debug("Wrote %d rows to %s", count, path)
        return path

    def write_json(self, path: PathLike, payload: Any) -> Path:
        path = Path(path)
        with self._atomic(path) as handle:
            json.dump(json_safe(payload), handle, indent=2, sort_keys=False)
            handle.write("\n")
        app_logger.debug("Wrote %s", path)
        return path

    def write_records(
        self, path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> Path:
        """JSON mirror of a CSV table as a list of records."""
        records: List[Dict[str, Any]] = [dict(zip(header, row)) for row in rows]
        return self.write_json(path, records)

    @contextmanager
    def _atomic(self, path: Path) -> Iterator[TextIO]:
        directory = path.parent if str(path.parent) else Path(".")
        descriptor, temp_name = tempfile.mkstemp(
            prefix=f".{path.name}.", suffix=".tmp", dir=directory
        )
        try:
            with os.fdopen(descriptor, "w", encoding="utf-8", newline="") as handle:
                yield handle
            if self._staged is None:
                os.replace(temp_name, path)
            else:
                self._staged.append((temp_name, path))
        except BaseException:
            _discard(temp_name)
            raise
