"""On-disk caches: catalogues, analysis reports, summaries, fixtures.

Every cache file carries (grouplib_version, algorithm_version); a mismatch
invalidates the file so stale enumerations are never reused across
algorithm changes.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from pathlib import Path

GROUPLIB_VERSION = "1"
ALGORITHM_VERSION = "1"
CACHE_FORMAT_VERSION = 1

ENV_CACHE_DIR = "HOPFGALOIS_CACHE_DIR"
ENV_THREADS = "HOPFGALOIS_THREADS"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "hopfgalois"


def resolve_cache_dir(cache_dir=None) -> Path:
    path = Path(cache_dir) if cache_dir else default_cache_dir()
    path.mkdir(parents=True, exist_ok=True)
    return path


def _stamp() -> dict:
    return {
        "version": CACHE_FORMAT_VERSION,
        "grouplib_version": GROUPLIB_VERSION,
        "algorithm_version": ALGORITHM_VERSION,
    }


def stamp_valid(obj: dict) -> bool:
    return (
        obj.get("version") == CACHE_FORMAT_VERSION
        and obj.get("grouplib_version") == GROUPLIB_VERSION
        and obj.get("algorithm_version") == ALGORITHM_VERSION
    )


def catalogue_path(cache_dir: Path, degree: int, type_label: str) -> Path:
    safe = type_label.replace("/", "_").replace(".", "-")
    return cache_dir / f"catalogue_deg{degree}_{safe}.json"


def write_catalogue_file(cache_dir: Path, degree: int, type_label: str, payload: dict):
    obj = dict(_stamp())
    obj.update(payload)
    path = catalogue_path(cache_dir, degree, type_label)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(obj, indent=1, sort_keys=True))
    tmp.replace(path)


def read_catalogue_file(cache_dir: Path, degree: int, type_label: str) -> dict | None:
    path = catalogue_path(cache_dir, degree, type_label)
    if not path.exists():
        return None
    try:
        obj = json.loads(path.read_text())
    except (json.JSONDecodeError, OSError):
        return None
    if not stamp_valid(obj):
        return None
    return obj


def reports_path(cache_dir: Path, degree: int) -> Path:
    return cache_dir / f"reports_deg{degree}.jsonl"


def append_report_line(cache_dir: Path, degree: int, record: dict):
    with reports_path(cache_dir, degree).open("a") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


def read_report_lines(cache_dir: Path, degree: int) -> list[dict]:
    path = reports_path(cache_dir, degree)
    if not path.exists():
        return []
    out = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if line:
            out.append(json.loads(line))
    return out


def summary_csv(rows) -> str:
    """Degree summary rows in Table-4 column order."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["Degree", "TransClasses", "NoHGS"])
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


# -- derived-value fixture store -------------------------------------------


def fixtures_path(cache_dir: Path) -> Path:
    return cache_dir / "fixtures.json"


def load_fixtures(cache_dir: Path) -> dict:
    path = fixtures_path(cache_dir)
    if not path.exists():
        return {}
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError:
        return {}


def record_fixture(cache_dir: Path, key: str, value) -> tuple[bool, dict | None]:
    """Store a derived value with a provenance stamp on first computation.

    Returns (matches_previous, previous_entry).  A freshly seeded value
    always matches.
    """
    fixtures = load_fixtures(cache_dir)
    prev = fixtures.get(key)
    if prev is not None:
        return prev["value"] == value, prev
    entry = {
        "value": value,
        "computed_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "grouplib_version": GROUPLIB_VERSION,
        "algorithm_version": ALGORITHM_VERSION,
    }
    fixtures[key] = entry
    fixtures_path(cache_dir).write_text(json.dumps(fixtures, indent=1, sort_keys=True))
    return True, None
