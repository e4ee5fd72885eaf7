"""Reduction-statistics tables and machine-readable run metadata.

All three render formats (plain text, CSV, JSON) carry the same fields;
CSV and JSON round-trip losslessly through the matching parse functions.
Percentages are always the 2-decimal truncated strings produced by the
weighting module.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

from termsift.corpus import DatasetStats
from termsift.weighting import CorpusIndex, KeyTermSet, removed_percentage

FORMATS = ("plain-text", "csv", "json")

_CSV_COLUMNS = [
    "kind",
    "name",
    "documents",
    "classes",
    "largest_class",
    "avg_doc_length",
    "scheme",
    "threshold",
    "term_count",
    "key_term_count",
    "removed_pct",
]


@dataclass
class ReductionRow:
    dataset: str
    scheme: str
    threshold: float | None
    term_count: int
    key_term_count: int
    removed_pct: str


@dataclass
class RunMetadata:
    stopword_count: int
    stopword_sha256: str
    wordnet_version: str
    wordnet_policy: str
    log_base: str
    aggregation: str
    alpha: float
    beta: float
    gamma: float
    min_count: int
    tool_version: str
    timestamp: str


def make_reduction_row(
    name: str, scheme: str, threshold: float | None, index: CorpusIndex, kd: KeyTermSet
) -> ReductionRow:
    if kd.vocabulary_size != len(index.vocabulary) or not kd.terms <= set(index.vocabulary):
        raise ValueError("key-term set was not derived from this corpus index")
    return ReductionRow(
        dataset=name,
        scheme=scheme,
        threshold=threshold,
        term_count=len(index.vocabulary),
        key_term_count=len(kd.terms),
        removed_pct=kd.removed_pct,
    )


def _render_plain(rows: list[ReductionRow], stats: list[DatasetStats]) -> str:
    out = []
    if stats:
        header = ["Data Set", "Documents", "Classes", "Largest class", "Avg doc length"]
        table = [header] + [
            [s.name, str(s.documents), str(s.classes), str(s.largest_class), str(s.avg_doc_length)]
            for s in stats
        ]
        out.append(_align(table))
    if rows:
        header = ["Data Set", "Scheme", "Threshold", "Terms", "Key terms", "% removed"]
        table = [header] + [
            [
                r.dataset,
                r.scheme,
                "-" if r.threshold is None else f"{r.threshold:g}",
                str(r.term_count),
                str(r.key_term_count),
                r.removed_pct,
            ]
            for r in rows
        ]
        out.append(_align(table))
    return "\n\n".join(out) + "\n"


def _align(table: list[list[str]]) -> str:
    widths = [max(len(row[c]) for row in table) for c in range(len(table[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_tables(
    rows: list[ReductionRow], stats: list[DatasetStats], fmt: str = "plain-text"
) -> str:
    """Render dataset statistics and reduction rows in the requested format."""
    if fmt == "plain-text":
        return _render_plain(rows, stats)
    if fmt == "json":
        doc = {"stats": [asdict(s) for s in stats], "rows": [asdict(r) for r in rows]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for s in stats:
            writer.writerow(
                ["stats", s.name, s.documents, s.classes, s.largest_class, s.avg_doc_length,
                 "", "", "", "", ""]
            )
        for r in rows:
            writer.writerow(
                ["reduction", r.dataset, "", "", "", "", r.scheme,
                 "" if r.threshold is None else f"{r.threshold!r}",
                 r.term_count, r.key_term_count, r.removed_pct]
            )
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}; expected one of {FORMATS}")


def parse_tables_json(text: str) -> tuple[list[ReductionRow], list[DatasetStats]]:
    doc = json.loads(text)
    stats = [DatasetStats(**s) for s in doc["stats"]]
    rows = [ReductionRow(**r) for r in doc["rows"]]
    return rows, stats


def parse_tables_csv(text: str) -> tuple[list[ReductionRow], list[DatasetStats]]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != _CSV_COLUMNS:
        raise ValueError("unexpected CSV header")
    rows, stats = [], []
    for rec in reader:
        d = dict(zip(_CSV_COLUMNS, rec))
        if d["kind"] == "stats":
            stats.append(
                DatasetStats(d["name"], int(d["documents"]), int(d["classes"]),
                             int(d["largest_class"]), int(d["avg_doc_length"]))
            )
        else:
            rows.append(
                ReductionRow(d["name"], d["scheme"],
                             None if d["threshold"] == "" else float(d["threshold"]),
                             int(d["term_count"]), int(d["key_term_count"]), d["removed_pct"])
            )
    return rows, stats


def emit_metadata(meta: RunMetadata) -> str:
    """JSON metadata record attributing a run's configuration."""
    return json.dumps(asdict(meta), indent=2, sort_keys=True) + "\n"


def check_row(row: ReductionRow) -> bool:
    """Recompute the percentage string from the row's own counts."""
    return row.removed_pct == removed_percentage(
        row.term_count - row.key_term_count, row.term_count
    )
