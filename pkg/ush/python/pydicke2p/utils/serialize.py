"""
Result serialization: JSON for nested results, CSV with a schema header for tables.

Floats are written with their shortest round-trip representation (at most 17
significant digits), so re-reading reproduces the in-memory values exactly.
"""
import dataclasses
import io
import json
import os
import sys
from enum import Enum
from typing import Any, Optional

import numpy as np
import pandas as pd
from wxflow import FileHandler


def to_jsonable(obj: Any) -> Any:
    """Recursively convert numpy scalars/arrays, enums, tuples and dataclasses to JSON types."""
    if hasattr(obj, 'to_dict'):
        return to_jsonable(obj.to_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable(dataclasses.asdict(obj))
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps_json(payload: Any) -> str:
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=True)


def _ensure_parent(path: str) -> None:
    FileHandler({'mkdir': [os.path.dirname(os.path.abspath(path))]}).sync()


def write_json(payload: Any, path: str) -> None:
    _ensure_parent(path)
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(dumps_json(payload) + "\n")


def read_json(path: str) -> Any:
    with open(path, encoding='utf-8') as fh:
        return json.load(fh)


def csv_text(frame: pd.DataFrame, schema: str) -> str:
    buffer = io.StringIO()
    buffer.write(f"# schema: {schema}\n")
    frame.to_csv(buffer, index=False, float_format='%.17g')
    return buffer.getvalue()


def write_csv(frame: pd.DataFrame, path: str, schema: str) -> None:
    """CSV preceded by a single ``# schema: name/version`` line."""
    _ensure_parent(path)
    with open(path, 'w', encoding='utf-8', newline='') as fh:
        fh.write(csv_text(frame, schema))


def read_csv(path: str) -> pd.DataFrame:
    with open(path, encoding='utf-8') as fh:
        header = fh.readline()
    if not header.startswith('# schema:'):
        raise ValueError(f"{path}: missing schema header")
    return pd.read_csv(path, skiprows=1, keep_default_na=True, float_precision='round_trip')


def read_csv_schema(path: str) -> str:
    with open(path, encoding='utf-8') as fh:
        return fh.readline().split(':', 1)[1].strip()


def emit(payload: Any, frame: Optional[pd.DataFrame], output: Optional[str], fmt: str, schema: str) -> None:
    """Write ``payload`` as JSON or ``frame`` as CSV to ``output``, or to stdout when no path is given."""
    if fmt == 'csv':
        if frame is None:
            frame = pd.DataFrame.from_records([to_jsonable(payload)])
        if output:
            write_csv(frame, output, schema)
        else:
            sys.stdout.write(csv_text(frame, schema))
        return
    if output:
        write_json(payload, output)
    else:
        sys.stdout.write(dumps_json(payload) + "\n")
