"""Point-cloud file reading and writing.

Two formats:

* ``doc``: a JSON document ``{"dim": 2, "points": [[0, 0], [0, 2]]}``.
* ``rows``: one point per line, coordinates separated by whitespace or
  commas; the dimension is inferred from the first row.  Blank lines and
  ``#`` comment lines are skipped.

Malformed input raises ValueError naming the offending row.  Files written
by `write_cloud_doc` re-ingest to an identical cloud.
"""

from __future__ import annotations

import json
from pathlib import Path

from .geometry import PointCloud
from .serialize import dumps, format_float

FORMATS = ("auto", "doc", "rows")


def parse_cloud_doc(text: str) -> PointCloud:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed cloud document: {exc}") from None
    if not isinstance(doc, dict) or "points" not in doc:
        raise ValueError("cloud document must be an object with a 'points' field")
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise ValueError("cloud document needs a nonempty 'points' list")
    dim = doc.get("dim")
    rows = []
    for k, row in enumerate(points):
        if not isinstance(row, list) or not all(isinstance(v, (int, float)) for v in row):
            raise ValueError(f"row {k}: expected a list of numbers")
        if dim is None:
            dim = len(row)
        if len(row) != dim:
            raise ValueError(f"row {k}: expected {dim} coordinates, got {len(row)}")
        rows.append([float(v) for v in row])
    if dim < 1:
        raise ValueError("row 0: empty point")
    return PointCloud(rows)


def parse_cloud_rows(text: str) -> PointCloud:
    rows = []
    dim = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.replace(",", " ").split()
        try:
            row = [float(v) for v in fields]
        except ValueError:
            raise ValueError(f"row {lineno}: non-numeric value in {stripped!r}") from None
        if dim is None:
            dim = len(row)
        if len(row) != dim:
            raise ValueError(f"row {lineno}: expected {dim} coordinates, got {len(row)}")
        rows.append(row)
    if not rows:
        raise ValueError("no points found")
    return PointCloud(rows)


def parse_cloud(text: str, fmt: str = "auto") -> PointCloud:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "doc":
        return parse_cloud_doc(text)
    if fmt == "rows":
        return parse_cloud_rows(text)
    return parse_cloud_doc(text) if text.lstrip().startswith("{") else parse_cloud_rows(text)


def read_cloud(path, fmt: str = "auto") -> PointCloud:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None
    return parse_cloud(text, fmt)


def cloud_to_doc(cloud: PointCloud) -> dict:
    return {"dim": cloud.dim, "points": cloud.points.tolist()}


def write_cloud_doc(cloud: PointCloud, path) -> None:
    Path(path).write_text(dumps(cloud_to_doc(cloud)))


def write_cloud_rows(cloud: PointCloud, path) -> None:
    lines = [" ".join(format_float(v) for v in row) for row in cloud.points]
    Path(path).write_text("\n".join(lines) + "\n")
