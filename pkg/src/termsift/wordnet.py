"""Parser for the WordNet on-disk database and lexical-category lookup.

Reads the standard text format (``index.noun``, ``data.noun``,
``index.verb``, ``data.verb``, ``lexnames``) exactly as distributed:
space-delimited fields, license header lines beginning with two spaces,
and data lines keyed by their byte offset within the file. Only the noun
and verb parts of speech are loaded, which yields the 41 lexicographer
categories (26 noun.* + 15 verb.*).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from termsift.errors import WordNetFormatError
from termsift.textprep import TermVector

REQUIRED_FILES = ("index.noun", "data.noun", "index.verb", "data.verb", "lexnames")

_VERSION_RE = re.compile(r"WordNet\s+(\d+\.\d+)")

# Morphological detachment rules (suffix, replacement), tried in order.
_NOUN_RULES = (
    ("s", ""),
    ("ses", "s"),
    ("xes", "x"),
    ("zes", "z"),
    ("ches", "ch"),
    ("shes", "sh"),
    ("men", "man"),
    ("ies", "y"),
)
_VERB_RULES = (
    ("s", ""),
    ("ies", "y"),
    ("es", "e"),
    ("es", ""),
    ("ed", "e"),
    ("ed", ""),
    ("ing", "e"),
    ("ing", ""),
)


@dataclass(frozen=True)
class Synset:
    pos: str  # "n" or "v"
    offset: int
    lex_filenum: int
    words: tuple[str, ...]


@dataclass(frozen=True)
class LexEntry:
    lemma: str
    categories: frozenset[str]

    @property
    def in_wordnet(self) -> bool:
        return bool(self.categories)


@dataclass(frozen=True)
class WordNetDb:
    noun_index: dict[str, tuple[int, ...]]
    verb_index: dict[str, tuple[int, ...]]
    lexnames: dict[int, str]
    synsets: dict[tuple[str, int], Synset]
    version: str

    @property
    def lemma_count(self) -> int:
        return len(self.noun_index) + len(self.verb_index)

    @property
    def synset_count(self) -> int:
        return len(self.synsets)


def _parse_index(path: Path, pos: str) -> dict[str, tuple[int, ...]]:
    index: dict[str, tuple[int, ...]] = {}
    with path.open(encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if line.startswith(" "):
                continue
            fields = line.split()
            try:
                lemma = fields[0]
                if fields[1] != pos:
                    raise ValueError(f"part of speech {fields[1]!r}, expected {pos!r}")
                synset_cnt = int(fields[2])
                p_cnt = int(fields[3])
                offsets = tuple(int(o) for o in fields[6 + p_cnt:])
                if len(offsets) != synset_cnt:
                    raise ValueError(f"{synset_cnt} synsets declared, {len(offsets)} offsets given")
            except (IndexError, ValueError) as exc:
                raise WordNetFormatError(f"{path}:{lineno}: malformed index line: {exc}") from exc
            index[lemma] = offsets
    return index


def _parse_data(path: Path, pos: str) -> tuple[dict[tuple[str, int], Synset], str]:
    synsets: dict[tuple[str, int], Synset] = {}
    version = ""
    byte_pos = 0
    with path.open("rb") as f:
        for lineno, raw in enumerate(f, 1):
            line_start = byte_pos
            byte_pos += len(raw)
            if raw.startswith(b"  "):
                m = _VERSION_RE.search(raw.decode("utf-8", errors="replace"))
                if m and not version:
                    version = m.group(1)
                continue
            line = raw.decode("utf-8", errors="replace").rstrip("\n")
            fields = line.split()
            try:
                offset = int(fields[0])
                if offset != line_start:
                    raise ValueError(f"synset offset {offset} != byte offset {line_start}")
                lex_filenum = int(fields[1])
                ss_type = fields[2]
                if ss_type != pos:
                    raise ValueError(f"synset type {ss_type!r}, expected {pos!r}")
                w_cnt = int(fields[3], 16)
                if w_cnt < 1:
                    raise ValueError("synset with no words")
                words = tuple(fields[4 + 2 * i] for i in range(w_cnt))
            except (IndexError, ValueError) as exc:
                raise WordNetFormatError(f"{path}:{lineno}: malformed data line: {exc}") from exc
            synsets[(pos, offset)] = Synset(pos=pos, offset=offset, lex_filenum=lex_filenum, words=words)
    return synsets, version


def _parse_lexnames(path: Path) -> dict[int, str]:
    table: dict[int, str] = {}
    with path.open(encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            fields = line.split()
            try:
                table[int(fields[0])] = fields[1]
            except (IndexError, ValueError) as exc:
                raise WordNetFormatError(f"{path}:{lineno}: malformed lexnames line: {exc}") from exc
    return table


def load_wordnet(directory: str | Path) -> WordNetDb:
    """Parse a WordNet database directory into an immutable in-memory db.

    Fails fast: a missing file or a malformed line raises, never a
    partially loaded database.
    """
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"WordNet directory not found: {root}")
    for name in REQUIRED_FILES:
        if not (root / name).is_file():
            raise FileNotFoundError(f"missing WordNet database file: {root / name}")

    lexnames = _parse_lexnames(root / "lexnames")
    noun_index = _parse_index(root / "index.noun", "n")
    verb_index = _parse_index(root / "index.verb", "v")
    noun_synsets, version_n = _parse_data(root / "data.noun", "n")
    verb_synsets, version_v = _parse_data(root / "data.verb", "v")
    synsets = {**noun_synsets, **verb_synsets}

    for index, pos, name in ((noun_index, "n", "index.noun"), (verb_index, "v", "index.verb")):
        for lemma, offsets in index.items():
            for off in offsets:
                if (pos, off) not in synsets:
                    raise WordNetFormatError(
                        f"{root / name}: lemma {lemma!r} references unknown synset offset {off}"
                    )
    for syn in synsets.values():
        if syn.lex_filenum not in lexnames:
            raise WordNetFormatError(
                f"{root}: synset {syn.offset} uses lexicographer file {syn.lex_filenum}"
                " absent from lexnames"
            )

    return WordNetDb(
        noun_index=noun_index,
        verb_index=verb_index,
        lexnames=lexnames,
        synsets=synsets,
        version=version_n or version_v or "unknown",
    )


def _categories_for(db: WordNetDb, word: str) -> frozenset[str]:
    cats = set()
    for pos, index in (("n", db.noun_index), ("v", db.verb_index)):
        for off in index.get(word, ()):
            cats.add(db.lexnames[db.synsets[(pos, off)].lex_filenum])
    return frozenset(cats)


def lexical_categories(db: WordNetDb, word: str) -> LexEntry:
    """Union of lexicographer categories over every noun/verb synset of ``word``."""
    return LexEntry(lemma=word, categories=_categories_for(db, word))


def base_forms(db: WordNetDb, word: str, pos: str) -> list[str]:
    """Candidate lemmas for ``word`` via the standard detachment rules.

    Only candidates actually present in the index are returned; the word
    itself comes first when indexed.
    """
    if pos == "noun":
        index, rules = db.noun_index, _NOUN_RULES
    elif pos == "verb":
        index, rules = db.verb_index, _VERB_RULES
    else:
        raise ValueError(f"pos must be 'noun' or 'verb', got {pos!r}")
    candidates = []
    if word in index:
        candidates.append(word)
    for suffix, replacement in rules:
        if word.endswith(suffix):
            cand = word[: len(word) - len(suffix)] + replacement
            if cand and cand in index and cand not in candidates:
                candidates.append(cand)
    return candidates


def _lookup(db: WordNetDb, stem: str, surfaces: Iterable[str]) -> LexEntry:
    # Cascade: the stem itself, then the surface forms, then detached base
    # forms of the surfaces. The first stage with any hit wins.
    cats = _categories_for(db, stem)
    if cats:
        return LexEntry(lemma=stem, categories=cats)
    surface_cats: set[str] = set()
    for surface in surfaces:
        surface_cats |= _categories_for(db, surface)
    if surface_cats:
        return LexEntry(lemma=stem, categories=frozenset(surface_cats))
    base_cats: set[str] = set()
    for surface in surfaces:
        for pos in ("noun", "verb"):
            for cand in base_forms(db, surface, pos):
                base_cats |= _categories_for(db, cand)
    return LexEntry(lemma=stem, categories=frozenset(base_cats))


def annotate_terms(
    db: WordNetDb,
    vectors: list[TermVector],
    originals: dict[str, set[str]],
    policy: str = "annotate-only",
) -> tuple[list[TermVector], dict[str, LexEntry]]:
    """Map every term to its lexical categories; optionally drop non-WordNet terms.

    Under ``annotate-only`` the vectors pass through unchanged; under
    ``filter-nonwordnet`` terms without any category are removed from
    every vector and totals are recomputed.
    """
    if policy not in ("annotate-only", "filter-nonwordnet"):
        raise ValueError(f"unknown wordnet policy {policy!r}")
    vocabulary = sorted({t for v in vectors for t in v.counts})
    annotations = {
        term: _lookup(db, term, sorted(originals.get(term, ()))) for term in vocabulary
    }
    if policy == "annotate-only":
        return vectors, annotations
    filtered = []
    for v in vectors:
        counts = {t: c for t, c in v.counts.items() if annotations[t].in_wordnet}
        filtered.append(TermVector(doc_id=v.doc_id, counts=counts, total=sum(counts.values())))
    return filtered, annotations
