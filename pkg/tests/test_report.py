import pytest

from termsift.corpus import DatasetStats
from termsift.report import (
    ReductionRow,
    RunMetadata,
    check_row,
    emit_metadata,
    make_reduction_row,
    parse_tables_csv,
    parse_tables_json,
    render_tables,
)
from termsift.textprep import TermVector
from termsift.weighting import KeyTermSet, build_index

STATS = [DatasetStats("demo", 20, 2, 12, 104)]
ROWS = [
    ReductionRow("demo", "tfidf", 0.028, 462, 447, "3.24"),
    ReductionRow("demo", "tfdf", 0.01, 462, 70, "84.84"),
    ReductionRow("demo", "joint", None, 462, 58, "87.44"),
]


class TestPlainText:
    def test_contains_all_fields(self):
        text = render_tables(ROWS, STATS, "plain-text")
        for token in ("demo", "tfidf", "0.028", "462", "447", "3.24", "84.84",
                      "Documents", "Key terms"):
            assert token in text

    def test_joint_threshold_dash(self):
        text = render_tables(ROWS, STATS, "plain-text")
        joint_line = next(l for l in text.splitlines() if " joint " in f" {l} ")
        assert " - " in joint_line

    def test_stats_only(self):
        text = render_tables([], STATS, "plain-text")
        assert "Documents" in text and "Scheme" not in text


class TestRoundTrip:
    def test_json(self):
        text = render_tables(ROWS, STATS, "json")
        rows, stats = parse_tables_json(text)
        assert rows == ROWS
        assert stats == STATS

    def test_csv(self):
        text = render_tables(ROWS, STATS, "csv")
        rows, stats = parse_tables_csv(text)
        assert rows == ROWS
        assert stats == STATS

    def test_csv_threshold_is_lossless(self):
        awkward = [ReductionRow("d", "tfidf", 0.1 + 0.2, 10, 5, "50.00")]
        rows, _ = parse_tables_csv(render_tables(awkward, [], "csv"))
        assert rows[0].threshold == 0.1 + 0.2  # bit-exact, not 0.3

    def test_render_is_a_fixed_point(self):
        for fmt, parse in (("json", parse_tables_json), ("csv", parse_tables_csv)):
            once = render_tables(ROWS, STATS, fmt)
            twice = render_tables(*parse(once), fmt)
            assert once == twice

    def test_csv_header_validated(self):
        with pytest.raises(ValueError):
            parse_tables_csv("a,b,c\n1,2,3\n")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            render_tables(ROWS, STATS, "xml")


class TestMakeRow:
    def make_index(self):
        return build_index([
            TermVector("a", {"x": 1, "y": 2}, 3),
            TermVector("b", {"y": 1, "z": 1}, 2),
        ])

    def test_row_from_selection(self):
        index = self.make_index()
        kd = KeyTermSet("tfidf", 0.1, "max", frozenset({"x"}), 3)
        row = make_reduction_row("demo", "tfidf", 0.1, index, kd)
        assert row.term_count == 3
        assert row.key_term_count == 1
        assert row.removed_pct == "66.66"
        assert check_row(row)

    def test_foreign_key_terms_rejected(self):
        index = self.make_index()
        kd = KeyTermSet("tfidf", 0.1, "max", frozenset({"unrelated"}), 3)
        with pytest.raises(ValueError):
            make_reduction_row("demo", "tfidf", 0.1, index, kd)
        kd = KeyTermSet("tfidf", 0.1, "max", frozenset({"x"}), 99)
        with pytest.raises(ValueError):
            make_reduction_row("demo", "tfidf", 0.1, index, kd)

    def test_check_row_detects_corruption(self):
        assert not check_row(ReductionRow("d", "tfidf", 0.1, 462, 447, "3.25"))


class TestMetadata:
    def test_emit_is_json_with_all_fields(self):
        import json

        meta = RunMetadata(
            stopword_count=574, stopword_sha256="ab" * 32, wordnet_version="2.1",
            wordnet_policy="annotate-only", log_base="e", aggregation="max",
            alpha=0.028, beta=0.01, gamma=0.005, min_count=1,
            tool_version="0.1.0", timestamp="2026-08-24T00:00:00+0000",
        )
        doc = json.loads(emit_metadata(meta))
        assert doc["stopword_count"] == 574
        assert doc["wordnet_version"] == "2.1"
        assert doc["alpha"] == 0.028
        assert set(doc) == set(meta.__dataclass_fields__)
