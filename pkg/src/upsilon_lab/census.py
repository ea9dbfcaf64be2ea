"""Census scanning: duplicate detection across a list of knots.

Input is JSON lines, one record per knot:

    {"name": "t09847", "alexander": [[0, 1], [1, -1], ...]}

Records are grouped by canonical Alexander polynomial and by canonical
Upsilon invariant.  Interesting output: duplicate groups of either kind and
the Upsilon-equal-but-Alexander-distinct pairs, all sorted by canonical key
so permuting the input lines cannot change the report.  Malformed lines are
skipped with a warning, never fatal.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import UpsilonLabError
from .invariants import upsilon_of
from .laurent import IntLaurentPoly


@dataclass(frozen=True)
class CensusRecord:
    name: str
    delta: IntLaurentPoly


def parse_census_line(line: str) -> CensusRecord:
    data = json.loads(line)
    name = str(data["name"])
    delta = IntLaurentPoly.from_pairs(data["alexander"])
    if not delta.is_lspace_form():
        raise UpsilonLabError(f"record {name!r}: polynomial is not in L-space form")
    return CensusRecord(name, delta)


def load_census(path: str | Path) -> tuple[list[CensusRecord], list[str]]:
    """Read a JSON-lines census file; malformed records become warnings."""
    records: list[CensusRecord] = []
    warnings: list[str] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                records.append(parse_census_line(line))
            except (UpsilonLabError, ValueError, KeyError, TypeError) as exc:
                warnings.append(f"line {lineno}: skipped ({exc})")
    return records, warnings


def _record_keys(record: CensusRecord) -> tuple[str, str]:
    delta_key = json.dumps(record.delta.knot_normalized().to_pairs())
    upsilon_key = json.dumps(upsilon_of(record.delta).to_json(), sort_keys=True)
    return delta_key, upsilon_key


def scan_census(records: Iterable[CensusRecord], threads: int = 1) -> dict:
    """Group records by canonical Alexander and canonical Upsilon.

    Output order is independent of input order: groups are sorted by their
    canonical key and names within a group are sorted.
    """
    records = list(records)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            keys = list(pool.map(_record_keys, records))
    else:
        keys = [_record_keys(r) for r in records]

    by_delta: dict[str, list[str]] = {}
    by_upsilon: dict[str, list[str]] = {}
    delta_key_of: dict[str, str] = {}
    for record, (dk, uk) in zip(records, keys):
        by_delta.setdefault(dk, []).append(record.name)
        by_upsilon.setdefault(uk, []).append(record.name)
        delta_key_of[record.name] = dk

    delta_groups = sorted(
        sorted(names) for names in by_delta.values() if len(names) > 1
    )
    upsilon_groups = sorted(
        sorted(names) for names in by_upsilon.values() if len(names) > 1
    )
    cross_pairs = []
    for names in by_upsilon.values():
        ordered = sorted(names)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1 :]:
                if delta_key_of[a] != delta_key_of[b]:
                    cross_pairs.append([a, b])
    cross_pairs.sort()

    return {
        "records": len(records),
        "delta_duplicate_groups": delta_groups,
        "upsilon_duplicate_groups": upsilon_groups,
        "upsilon_equal_delta_distinct": cross_pairs,
    }


def sample_census_path() -> Path:
    """Path of the bundled 10-record sample file."""
    return Path(__file__).resolve().parent / "data" / "census_sample.jsonl"
