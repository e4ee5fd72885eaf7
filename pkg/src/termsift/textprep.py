"""Tokenization, stopword removal and stemming into term-frequency vectors.

``porter_stem`` resolves to the compiled extension when it was built, and
to the pure-Python module otherwise; both implement the identical
algorithm (see ``benchmarks/bench_stemmer.py`` for the speed difference).
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from termsift.corpus import RawDocument, StopwordList

try:
    from termsift._porter import stem as porter_stem

    USING_COMPILED_STEMMER = True
except ImportError:  # pragma: no cover - depends on the build
    from termsift.porter import stem as porter_stem

    USING_COMPILED_STEMMER = False

_TOKEN_RE = re.compile(r"[a-z]+")


@dataclass(frozen=True)
class TermVector:
    """Term -> occurrence count for one document; total is the count sum."""

    doc_id: str
    counts: Mapping[str, int]
    total: int


def tokenize(text: str) -> list[str]:
    """Lowercase, split on non-letters, drop tokens shorter than 2 chars."""
    return [t for t in _TOKEN_RE.findall(text.lower()) if len(t) >= 2]


def remove_stopwords(tokens: Iterable[str], stopwords: StopwordList) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def preprocess_document(doc: RawDocument, stopwords: StopwordList) -> TermVector:
    """tokenize -> remove stopwords -> stem, counted into a TermVector."""
    stems = [porter_stem(t) for t in remove_stopwords(tokenize(doc.text), stopwords)]
    counts = Counter(stems)
    return TermVector(doc_id=doc.doc_id, counts=dict(counts), total=len(stems))


def preprocess_corpus(
    docs: Iterable[RawDocument], stopwords: StopwordList
) -> tuple[list[TermVector], dict[str, set[str]]]:
    """Preprocess every document, also collecting stem -> surface forms.

    The surface-form map feeds WordNet lookup, where a Porter stem like
    "poni" is not itself a lemma but its surfaces ("pony", "ponies") are.
    """
    vectors = []
    originals: dict[str, set[str]] = {}
    for doc in docs:
        surviving = remove_stopwords(tokenize(doc.text), stopwords)
        stems = []
        for token in surviving:
            s = porter_stem(token)
            stems.append(s)
            originals.setdefault(s, set()).add(token)
        counts = Counter(stems)
        vectors.append(TermVector(doc_id=doc.doc_id, counts=dict(counts), total=len(stems)))
    return vectors, originals
