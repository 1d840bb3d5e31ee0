"""Deterministic dataset serialization (CSV and JSON).

No timestamps, hostnames, or other run-varying fields go into the output:
identical configuration must produce byte-identical files.  Floats are
written with 17 significant digits (value-preserving round trip).
"""
from __future__ import annotations

import io
import json
import sys
from typing import Mapping, Optional, Sequence

import numpy as np

__all__ = ["format_float", "render_dataset", "write_dataset"]


def format_float(v: float) -> str:
    return "%.17g" % float(v)


def render_dataset(
    meta: Mapping[str, str],
    columns: Sequence[str],
    rows: np.ndarray,
    annotations: Sequence[str] = (),
    fmt: str = "csv",
) -> str:
    """Render a table with '#'-prefixed metadata/annotation header (csv) or
    an equivalent JSON document.  meta insertion order is preserved."""
    rows = np.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[1] != len(columns):
        raise ValueError("rows must be 2-d with one entry per column")
    if fmt == "csv":
        buf = io.StringIO()
        for key, val in meta.items():
            buf.write(f"# {key}: {val}\n")
        for note in annotations:
            buf.write(f"# {note}\n")
        buf.write(",".join(columns) + "\n")
        for row in rows:
            buf.write(",".join(format_float(v) for v in row) + "\n")
        return buf.getvalue()
    if fmt == "json":
        doc = {
            "meta": dict(meta),
            "annotations": list(annotations),
            "columns": list(columns),
            "rows": [[float(format_float(v)) for v in row] for row in rows],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r} (use csv or json)")


def write_dataset(
    out: Optional[str],
    meta: Mapping[str, str],
    columns: Sequence[str],
    rows: np.ndarray,
    annotations: Sequence[str] = (),
    fmt: str = "csv",
) -> None:
    """Write to the given path, or stdout when out is None."""
    text = render_dataset(meta, columns, rows, annotations, fmt)
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)
