"""Deterministic JSON/CSV export of the space tables and the census cache.

All output is byte-deterministic: rows follow canonical ids, JSON keys are
emitted in a fixed order, and every file ends with a newline.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Sequence

from .contextuality import ContextSet
from .geometry import Space
from .pentads import Pentad, pentad_from_planes, pentad_to_config, pentad_to_pentagram
from .pauli import OBSERVABLES, TYPE_OF

__all__ = [
    "CacheError",
    "points_table",
    "lines_table",
    "planes_table",
    "pentad_records",
    "render_csv",
    "render_json",
    "census_csv",
    "write_cache",
    "load_cache",
    "load_context_file",
    "CACHE_FORMAT",
    "CACHE_VERSION",
]

CACHE_FORMAT = "w52-pentad-census"
CACHE_VERSION = 1


class CacheError(ValueError):
    """The cache file is missing, malformed, or incomplete."""


def _word(point_id: int) -> str:
    return OBSERVABLES[point_id - 1].word


def _coords(point_id: int) -> str:
    return format(point_id, "06b")


def points_table(space: Space, coords: bool = False) -> list[dict]:
    rows = []
    for o in space.points:
        row = {"id": o.point_id, "word": o.word, "type": TYPE_OF[o.point_id].value}
        if coords:
            row["coords"] = _coords(o.point_id)
        rows.append(row)
    return rows


def lines_table(space: Space) -> list[dict]:
    return [
        {"id": line.line_id, "points": [_word(p) for p in line.points], "sign": line.sign}
        for line in space.lines
    ]


def planes_table(space: Space) -> list[dict]:
    return [
        {
            "id": plane.plane_id,
            "points": [_word(p) for p in plane.points],
            "sign": plane.sign,
            "class": plane.plane_class.value,
            "b_line": plane.b_line,
        }
        for plane in space.planes
    ]


def pentad_records(space: Space, pentads: Sequence[Pentad]) -> list[dict]:
    """One census-cache record per pentad, with both derived contextual sets."""
    records = []
    for pentad in pentads:
        pentagram = pentad_to_pentagram(space, pentad)
        config = pentad_to_config(space, pentad)
        records.append(
            {
                "id": pentad.pentad_id,
                "planes": list(pentad.planes),
                "pentagram": {
                    "edges": [[_word(p) for p in edge] for edge in pentagram.edges],
                    "negative_edges": pentagram.negative_edges,
                },
                "config": {
                    "contexts": [[_word(p) for p in ctx] for ctx in config.contexts],
                    "negative_contexts": config.negative_contexts,
                },
            }
        )
    return records


def render_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: Sequence[dict], columns: Sequence[str]) -> str:
    """CSV with list-valued fields joined by single spaces."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(
            [
                " ".join(str(x) for x in row[col]) if isinstance(row[col], list) else row[col]
                for col in columns
            ]
        )
    return buf.getvalue()


_CENSUS_COLUMNS = (
    "type",
    "count",
    "C-",
    "O_A",
    "O_B",
    "O_C",
    "F-",
    "Fa",
    "Fb",
    "Fc",
    "P_C-",
    "P_OA",
    "P_OB",
    "P_OC",
    "A_on_neg",
    "example_pentad",
)


def census_csv(census) -> str:
    """The census summary table, one row per type in canonical order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CENSUS_COLUMNS)
    for record in census.records:
        sig = record.signature
        writer.writerow(
            (record.assigned_type, record.multiplicity)
            + sig.table_row
            + sig.pentagram.as_tuple
            + (record.example_pentad,)
        )
    return buf.getvalue()


def write_cache(path: str | Path, space: Space, pentads: Sequence[Pentad]) -> None:
    obj = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "generator": {"package": "w52", "points": 63, "lines": 315, "planes": 135},
        "records": pentad_records(space, pentads),
    }
    Path(path).write_text(render_json(obj), encoding="utf-8")


def load_cache(path: str | Path, space: Space) -> tuple[Pentad, ...]:
    """Rebuild the pentad list from a cache file.

    The plane ids are the source of truth; every pentad is revalidated
    against the space, so a tampered file fails loudly.
    """
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("format") != CACHE_FORMAT:
        raise CacheError(f"{path} is not a {CACHE_FORMAT} file")
    if obj.get("version") != CACHE_VERSION:
        raise CacheError(f"unsupported cache version {obj.get('version')!r}")
    records = obj.get("records")
    if not isinstance(records, list) or len(records) != 12096:
        n = len(records) if isinstance(records, list) else "no"
        raise CacheError(f"complete cache must hold 12096 records, found {n}")
    pentads = []
    for i, record in enumerate(records):
        if record.get("id") != i:
            raise CacheError(f"record {i} has id {record.get('id')!r}; cache is reordered")
        try:
            pentads.append(pentad_from_planes(space, record["planes"], pentad_id=i))
        except (KeyError, TypeError, ValueError) as exc:
            raise CacheError(f"record {i} is not a valid pentad: {exc}") from exc
    return tuple(pentads)


def load_context_file(path: str | Path) -> ContextSet:
    """Read a context file: {"contexts": [["XXI", "YYI", "ZZI"], ...]}."""
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc
    return ContextSet.from_json_obj(obj)
