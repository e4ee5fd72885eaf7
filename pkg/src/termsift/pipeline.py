"""End-to-end key-term extraction run over one corpus.

Stage order is fixed: (1) tokenize into the raw term set, (2) remove
stopwords, (3) Porter-stem, (4) WordNet category annotation (skippable),
(5) global unique words + frequency floor, (6) the three weight matrices,
(7) threshold selection. Each stage is logged, so a run's log shows the
seven steps in order.
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

from termsift import __version__
from termsift import corpus as corpus_io
from termsift import report as report_mod
from termsift import weighting, wordnet
from termsift.textprep import TermVector, porter_stem, remove_stopwords, tokenize

log = logging.getLogger("termsift.pipeline")

WORDNET_POLICIES = ("annotate-only", "filter-nonwordnet", "off")
LOG_BASES = {"e": math.e, "10": 10.0, "2": 2.0}


@dataclass
class PipelineConfig:
    corpus_path: str
    layout: str = "flat"
    stopword_path: str | None = None  # bundled default list when None
    wordnet_dir: str | None = None
    wordnet_policy: str = "annotate-only"
    alpha: float = 0.028
    beta: float = 0.01
    gamma: float = 0.005
    aggregation: str = "max"
    log_base: str = "e"
    min_count: int = 1
    out_dir: str = "termsift-out"
    matrix_format: str = "coordinate-triplet"

    def validate(self) -> None:
        weighting.Thresholds(self.alpha, self.beta, self.gamma)
        if self.layout not in corpus_io.LAYOUTS:
            raise ValueError(f"unknown layout {self.layout!r}")
        if self.wordnet_policy not in WORDNET_POLICIES:
            raise ValueError(f"unknown wordnet policy {self.wordnet_policy!r}")
        if self.aggregation not in ("max", "mean", "any-doc"):
            raise ValueError(f"unknown aggregation {self.aggregation!r}")
        if self.log_base not in LOG_BASES:
            raise ValueError(f"log base must be one of {sorted(LOG_BASES)}")
        if self.min_count < 1:
            raise ValueError("min_count must be >= 1")
        if not Path(self.corpus_path).is_dir():
            raise FileNotFoundError(
                f"stage load_corpus: corpus root is not a directory: {self.corpus_path}"
            )
        if self.stopword_path is not None and not Path(self.stopword_path).is_file():
            raise FileNotFoundError(
                f"stage load_stopwords: stopword file not found: {self.stopword_path}"
            )
        if self.wordnet_dir is not None and not Path(self.wordnet_dir).is_dir():
            raise FileNotFoundError(
                f"stage load_wordnet: WordNet directory not found: {self.wordnet_dir}"
            )


@dataclass
class PipelineResult:
    stats: corpus_io.DatasetStats
    key_terms: dict[str, weighting.KeyTermSet]  # per scheme
    joint: weighting.KeyTermSet
    rows: list[report_mod.ReductionRow]
    artifacts: dict[str, Path] = field(default_factory=dict)


def _stage(msg: str) -> None:
    log.info(msg)


@contextmanager
def _stage_errors(name: str):
    """Prefix any stage failure with the stage name, keeping the exception type."""
    try:
        yield
    except Exception as exc:
        exc.args = (f"stage {name}: {exc}",)
        raise


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    config.validate()
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    with _stage_errors("load_corpus"):
        corpus = corpus_io.load_corpus(config.corpus_path, config.layout)
    with _stage_errors("load_stopwords"):
        if config.stopword_path is not None:
            stopwords = corpus_io.load_stopwords(config.stopword_path)
        else:
            stopwords = corpus_io.default_stopwords()
    log.info("loaded corpus %s: %d documents; stopword list: %d words",
             corpus.name, len(corpus), len(stopwords))

    db = None
    if config.wordnet_policy != "off":
        if config.wordnet_dir is None:
            log.warning("no WordNet directory configured; step 4 will be skipped "
                        "(wordnet-policy is effectively 'off')")
        else:
            with _stage_errors("load_wordnet"):
                db = wordnet.load_wordnet(config.wordnet_dir)
            log.info("loaded WordNet %s: %d lemmas, %d synsets",
                     db.version, db.lemma_count, db.synset_count)
    stats = corpus_io.corpus_summary(corpus)

    _stage("step 1/7: extracting term sets (tokenization)")
    tokenized = [tokenize(d.text) for d in corpus]

    _stage("step 2/7: removing stop words")
    filtered = [remove_stopwords(tokens, stopwords) for tokens in tokenized]

    _stage("step 3/7: applying Porter stemming")
    vectors: list[TermVector] = []
    originals: dict[str, set[str]] = {}
    for doc, tokens in zip(corpus, filtered):
        stems = []
        for token in tokens:
            s = porter_stem(token)
            stems.append(s)
            originals.setdefault(s, set()).add(token)
        vectors.append(TermVector(doc_id=doc.doc_id, counts=dict(Counter(stems)), total=len(stems)))

    annotations: dict[str, wordnet.LexEntry] = {}
    if db is not None:
        _stage(f"step 4/7: WordNet lexical-category annotation (policy={config.wordnet_policy})")
        before = len({t for v in vectors for t in v.counts})
        vectors, annotations = wordnet.annotate_terms(
            db, vectors, originals, policy=config.wordnet_policy
        )
        after = len({t for v in vectors for t in v.counts})
        log.info("vocabulary: %d terms before WordNet step, %d after", before, after)
    else:
        log.info("step 4/7 skipped (wordnet off)")

    _stage("step 5/7: global unique words and frequency floor")
    with _stage_errors("build_index"):
        index = weighting.build_index(vectors)
    if config.min_count > 1:
        frequent = weighting.frequent_terms(index, config.min_count)
        vectors = [
            TermVector(
                doc_id=v.doc_id,
                counts={t: c for t, c in v.counts.items() if t in frequent},
                total=sum(c for t, c in v.counts.items() if t in frequent),
            )
            for v in vectors
        ]
        index = weighting.build_index(vectors)

    _stage("step 6/7: computing tf-idf, tf-df and tf2 weight matrices")
    base = LOG_BASES[config.log_base]
    with _stage_errors("compute_matrices"):
        matrices = {s: weighting.compute_matrix(index, s, log_base=base)
                    for s in weighting.SCHEMES}

    _stage("step 7/7: selecting key terms against the thresholds")
    thresholds = weighting.Thresholds(config.alpha, config.beta, config.gamma)
    agg = config.aggregation
    key_terms = {
        s: weighting.select_key_terms(m, thresholds.for_scheme(s), agg)
        for s, m in matrices.items()
    }
    joint = weighting.select_joint(matrices.values(), thresholds, agg)

    rows = [
        report_mod.make_reduction_row(corpus.name, s, thresholds.for_scheme(s), index, kd)
        for s, kd in key_terms.items()
    ]
    rows.append(report_mod.make_reduction_row(corpus.name, "joint", None, index, joint))

    with _stage_errors("write_outputs"):
        artifacts = _write_outputs(
            out_dir, config, stats, rows, matrices, key_terms, joint, stopwords, db, annotations
        )
    return PipelineResult(stats=stats, key_terms=key_terms, joint=joint, rows=rows,
                          artifacts=artifacts)


def _write_outputs(out_dir, config, stats, rows, matrices, key_terms, joint,
                   stopwords, db, annotations) -> dict[str, Path]:
    artifacts: dict[str, Path] = {}
    # metadata goes first: no report counts as final without it
    meta = report_mod.RunMetadata(
        stopword_count=len(stopwords),
        stopword_sha256=stopwords.sha256,
        wordnet_version=db.version if db is not None else "none",
        wordnet_policy=config.wordnet_policy if db is not None else "off",
        log_base=config.log_base,
        aggregation=config.aggregation,
        alpha=config.alpha,
        beta=config.beta,
        gamma=config.gamma,
        min_count=config.min_count,
        tool_version=__version__,
        timestamp=time.strftime("%Y-%m-%dT%H:%M:%S%z"),
    )
    meta_path = out_dir / "metadata.json"
    meta_path.write_text(report_mod.emit_metadata(meta), encoding="utf-8")
    artifacts["metadata"] = meta_path

    for fmt, filename in (("plain-text", "report.txt"), ("csv", "report.csv"),
                          ("json", "report.json")):
        path = out_dir / filename
        path.write_text(report_mod.render_tables(rows, [stats], fmt), encoding="utf-8")
        artifacts[filename] = path

    ext = "csv" if config.matrix_format == "csv" else "triplets"
    for scheme, matrix in matrices.items():
        path = out_dir / f"matrix_{scheme}.{ext}"
        weighting.export_matrix(matrix, path, fmt=config.matrix_format,
                                key_terms=key_terms[scheme])
        artifacts[f"matrix_{scheme}"] = path

    for name, kd in list(key_terms.items()) + [("joint", joint)]:
        path = out_dir / f"keyterms_{name}.txt"
        path.write_text("\n".join(sorted(kd.terms)) + "\n", encoding="utf-8")
        artifacts[f"keyterms_{name}"] = path

    if annotations:
        path = out_dir / "lexical_categories.tsv"
        lines = [
            f"{term}\t{','.join(sorted(entry.categories)) or '-'}"
            for term, entry in sorted(annotations.items())
        ]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        artifacts["lexical_categories"] = path
    return artifacts
