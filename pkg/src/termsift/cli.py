"""Command-line interface.

Subcommands:
    stats       dataset statistics only
    preprocess  per-document term vectors as doc_id,term,count triplets
    weigh       one weight matrix export (stages 1-6)
    select      the full pipeline (stages 1-7) with reports
    stem        Porter stems for words given on the command line
    lex         WordNet lexical categories for words

Options can come from a flat key=value config file (``--config``); flags
win over the file. The WordNet directory falls back to $WNSEARCHDIR when
no flag or config key names it.

Exit codes: 0 success, 1 usage error, 2 input data error, 3 internal error.
"""

from __future__ import annotations

import argparse
import logging
import math
import os
import sys
from pathlib import Path

from termsift import __version__
from termsift import corpus as corpus_io
from termsift import weighting, wordnet
from termsift.errors import TermsiftError, UndefinedEntryError
from termsift.pipeline import LOG_BASES, PipelineConfig, run_pipeline
from termsift.textprep import porter_stem, preprocess_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3

WORDNET_ENV = "WNSEARCHDIR"

log = logging.getLogger("termsift.cli")


class _UsageExit(Exception):
    def __init__(self, message: str):
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise _UsageExit(message)


def _add_pipeline_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("corpus_pos", nargs="?", metavar="corpus", help="corpus root directory")
    p.add_argument("--corpus", help="corpus root directory (alternative to the positional)")
    p.add_argument("--layout", choices=corpus_io.LAYOUTS)
    p.add_argument("--stopwords", help="stopword file (default: bundled list)")
    p.add_argument("--wordnet-dir", help=f"WordNet database directory (default: ${WORDNET_ENV})")
    p.add_argument("--wordnet-policy", choices=("annotate-only", "filter-nonwordnet", "off"))
    p.add_argument("--alpha", type=float, help="minimum tf-idf threshold")
    p.add_argument("--beta", type=float, help="minimum tf-df threshold")
    p.add_argument("--gamma", type=float, help="minimum tf2 threshold")
    p.add_argument("--aggregation", choices=("max", "mean", "any-doc"))
    p.add_argument("--log-base", choices=sorted(LOG_BASES))
    p.add_argument("--min-count", type=int, help="corpus frequency floor for terms")
    p.add_argument("--out", help="output directory")
    p.add_argument("--format", choices=("csv", "coordinate-triplet"),
                   help="matrix export format")
    p.add_argument("--config", help="flat key=value config file; flags override it")


def build_parser() -> _Parser:
    parser = _Parser(prog="termsift", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"termsift {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log stage progress")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("stats", "dataset statistics (documents, classes, average length)"),
        ("preprocess", "dump per-document term vectors (stages 1-3)"),
        ("weigh", "export one weight matrix (stages 1-6)"),
        ("select", "full key-term selection pipeline (stages 1-7)"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_pipeline_flags(p)
        if name == "weigh":
            p.add_argument("--scheme", choices=weighting.SCHEMES, default="tfidf")

    p = sub.add_parser("stem", help="print Porter stems, one per line")
    p.add_argument("words", nargs="+")

    p = sub.add_parser("lex", help="print WordNet lexical categories per word")
    p.add_argument("words", nargs="+")
    p.add_argument("--wordnet-dir", help=f"WordNet database directory (default: ${WORDNET_ENV})")
    return parser


def _read_config_file(path: str) -> dict[str, str]:
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"config file not found: {p}")
    values: dict[str, str] = {}
    for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"{p}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = stripped.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONFIG_KEYS = {
    "corpus": str, "layout": str, "stopwords": str, "wordnet_dir": str,
    "wordnet_policy": str, "alpha": float, "beta": float, "gamma": float,
    "aggregation": str, "log_base": str, "min_count": int, "out": str, "format": str,
}


def _resolve_config(args: argparse.Namespace) -> PipelineConfig:
    file_values: dict[str, object] = {}
    if getattr(args, "config", None):
        for key, raw in _read_config_file(args.config).items():
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r} in {args.config}")
            file_values[key] = _CONFIG_KEYS[key](raw)

    def pick(flag_name: str, file_key: str, default):
        value = getattr(args, flag_name, None)
        if value is not None:
            return value
        if file_key in file_values:
            return file_values[file_key]
        return default

    corpus_path = args.corpus_pos or pick("corpus", "corpus", None)
    if corpus_path is None:
        raise _UsageExit("a corpus directory is required (positional or --corpus)")
    wordnet_dir = pick("wordnet_dir", "wordnet_dir", os.environ.get(WORDNET_ENV))
    return PipelineConfig(
        corpus_path=str(corpus_path),
        layout=pick("layout", "layout", "flat"),
        stopword_path=pick("stopwords", "stopwords", None),
        wordnet_dir=wordnet_dir,
        wordnet_policy=pick("wordnet_policy", "wordnet_policy", "annotate-only"),
        alpha=pick("alpha", "alpha", 0.028),
        beta=pick("beta", "beta", 0.01),
        gamma=pick("gamma", "gamma", 0.005),
        aggregation=pick("aggregation", "aggregation", "max"),
        log_base=pick("log_base", "log_base", "e"),
        min_count=pick("min_count", "min_count", 1),
        out_dir=pick("out", "out", "termsift-out"),
        matrix_format=pick("format", "format", "coordinate-triplet"),
    )


def _load_inputs(config: PipelineConfig):
    corpus = corpus_io.load_corpus(config.corpus_path, config.layout)
    if config.stopword_path is not None:
        stopwords = corpus_io.load_stopwords(config.stopword_path)
    else:
        stopwords = corpus_io.default_stopwords()
    return corpus, stopwords


def _cmd_stats(args) -> int:
    config = _resolve_config(args)
    corpus, _ = _load_inputs(config)
    s = corpus_io.corpus_summary(corpus)
    print(f"dataset\t{s.name}")
    print(f"documents\t{s.documents}")
    print(f"classes\t{s.classes}")
    print(f"largest_class\t{s.largest_class}")
    print(f"avg_doc_length\t{s.avg_doc_length}")
    return EXIT_OK


def _cmd_preprocess(args) -> int:
    config = _resolve_config(args)
    corpus, stopwords = _load_inputs(config)
    vectors, _ = preprocess_corpus(corpus, stopwords)
    for v in vectors:
        for term in sorted(v.counts):
            print(f"{v.doc_id},{term},{v.counts[term]}")
    return EXIT_OK


def _cmd_weigh(args) -> int:
    config = _resolve_config(args)
    corpus, stopwords = _load_inputs(config)
    vectors, _ = preprocess_corpus(corpus, stopwords)
    index = weighting.build_index(vectors)
    matrix = weighting.compute_matrix(index, args.scheme, log_base=LOG_BASES[config.log_base])
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ext = "csv" if config.matrix_format == "csv" else "triplets"
    path = weighting.export_matrix(matrix, out_dir / f"matrix_{args.scheme}.{ext}",
                                   fmt=config.matrix_format)
    print(path)
    return EXIT_OK


def _cmd_select(args) -> int:
    config = _resolve_config(args)
    result = run_pipeline(config)
    for row in result.rows:
        threshold = "-" if row.threshold is None else f"{row.threshold:g}"
        print(f"{row.scheme}\tthreshold={threshold}\tterms={row.term_count}"
              f"\tkey_terms={row.key_term_count}\tremoved_pct={row.removed_pct}")
    print(f"artifacts written to {config.out_dir}")
    return EXIT_OK


def _cmd_stem(args) -> int:
    for word in args.words:
        lowered = word.lower()
        if not lowered.isascii() or not lowered.isalpha():
            raise _UsageExit(f"not an alphabetic word: {word!r}")
        print(porter_stem(lowered))
    return EXIT_OK


def _cmd_lex(args) -> int:
    wordnet_dir = args.wordnet_dir or os.environ.get(WORDNET_ENV)
    if not wordnet_dir:
        raise _UsageExit(f"--wordnet-dir or ${WORDNET_ENV} is required for 'lex'")
    db = wordnet.load_wordnet(wordnet_dir)
    for word in args.words:
        entry = wordnet.lexical_categories(db, word.lower())
        cats = ",".join(sorted(entry.categories)) if entry.in_wordnet else "-"
        print(f"{word}\t{cats}")
    return EXIT_OK


_COMMANDS = {
    "stats": _cmd_stats,
    "preprocess": _cmd_preprocess,
    "weigh": _cmd_weigh,
    "select": _cmd_select,
    "stem": _cmd_stem,
    "lex": _cmd_lex,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit as exc:
        print(f"termsift: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except _UsageExit as exc:
        print(f"termsift: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, OSError, ValueError, TermsiftError) as exc:
        if isinstance(exc, UndefinedEntryError):
            print(f"termsift: internal error: {exc}", file=sys.stderr)
            return EXIT_INTERNAL
        print(f"termsift: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except Exception as exc:  # invariant violations and genuine bugs
        print(f"termsift: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
