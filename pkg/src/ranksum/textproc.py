"""Deterministic text preprocessing shared by every extractor.

Sentence segmentation is rule based: a run of ``.``, ``!`` or ``?`` followed
by whitespace (or end of text) closes a sentence, unless the period directly
follows a known abbreviation. Tokenization lowercases and splits on
non-alphanumeric boundaries (digits are kept, underscores are not). Content
tokens are what remains after stopword removal and stemming; a stem that
itself lands in the stopword list is dropped so that content tokens never
collide with stopwords.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Sequence

from .errors import DataError
from .porter import stem

# Fixed abbreviation list, version 1. Segmentation treats a period directly
# after one of these (case-insensitive) as non-terminating.
ABBREVIATIONS = frozenset({
    "mr", "mrs", "ms", "dr", "prof", "rev", "hon", "st", "mt", "sr", "jr",
    "gen", "col", "lt", "sgt", "capt", "cmdr", "maj",
    "inc", "ltd", "co", "corp", "dept", "univ", "assn", "bros",
    "vs", "etc", "al", "ca", "cf", "eg", "ie", "viz",
    "fig", "figs", "eq", "sec", "no", "nos", "vol", "vols", "pp", "ed", "eds",
    "approx", "est", "min", "max",
    "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct",
    "nov", "dec", "mon", "tue", "wed", "thu", "fri", "sat", "sun",
    "ave", "blvd", "rd", "hwy",
})

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)
_BOUNDARY_RE = re.compile(r"[.!?]+[\"'”’)\]]*(?:\s+|$)")
_TRAILING_WORD_RE = re.compile(r"([^\W\d_]+)$", re.UNICODE)


@dataclass(frozen=True)
class Sentence:
    """One sentence with its raw text and derived token views."""

    index: int
    text: str
    tokens: tuple[str, ...]
    content_tokens: tuple[str, ...]


@dataclass(frozen=True)
class Document:
    """An ordered sequence of sentences parsed from one raw text."""

    id: str
    raw: str
    sentences: tuple[Sentence, ...]
    word_count: int

    def __len__(self) -> int:
        return len(self.sentences)


_default_stopwords: frozenset[str] | None = None


def load_stopwords(path: str | None = None) -> frozenset[str]:
    """Read a stopword file (one word per line, ``#`` comments allowed).

    With no path, returns the packaged English list (cached).
    """
    global _default_stopwords
    if path is None:
        if _default_stopwords is None:
            text = (
                resources.files("ranksum")
                .joinpath("data/stopwords.txt")
                .read_text(encoding="utf-8")
            )
            _default_stopwords = _parse_stopwords(text)
        return _default_stopwords
    try:
        with open(path, encoding="utf-8") as fh:
            return _parse_stopwords(fh.read())
    except OSError as exc:
        raise DataError(f"cannot read stopword file {path!r}: {exc}") from exc


def _parse_stopwords(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return frozenset(words)


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; splits on non-alphanumeric boundaries."""
    return _TOKEN_RE.findall(text.lower())


def _sentence_texts(raw: str) -> list[str]:
    """Split raw text into sentence strings, keeping original characters."""
    texts = []
    start = 0
    for match in _BOUNDARY_RE.finditer(raw):
        candidate = raw[start : match.end()]
        if match.group().startswith("."):
            word = _TRAILING_WORD_RE.search(raw[start : match.start()])
            if word and word.group(1).lower() in ABBREVIATIONS:
                continue
        if candidate.strip():
            texts.append(candidate.strip())
        start = match.end()
    tail = raw[start:]
    if tail.strip():
        texts.append(tail.strip())
    return texts


def preprocess(
    tokens: Iterable[str], stopwords: frozenset[str] | set[str]
) -> list[str]:
    """Drop stopwords and stem the rest, preserving order and duplicates."""
    out = []
    for token in tokens:
        if token in stopwords:
            continue
        stemmed = stem(token)
        if stemmed not in stopwords:
            out.append(stemmed)
    return out


def split_sentences(
    raw: str, stopwords: frozenset[str] | set[str] | None = None
) -> list[Sentence]:
    """Segment raw text into fully tokenized sentences, in document order."""
    if stopwords is None:
        stopwords = load_stopwords()
    sentences = []
    for i, text in enumerate(_sentence_texts(raw)):
        tokens = tuple(tokenize(text))
        content = tuple(preprocess(tokens, stopwords))
        sentences.append(
            Sentence(index=i, text=text, tokens=tokens, content_tokens=content)
        )
    return sentences


def parse_document(
    doc_id: str, raw: str, stopwords: frozenset[str] | set[str] | None = None
) -> Document:
    """Build a Document: segment, tokenize, and preprocess in one pass."""
    sentences = split_sentences(raw, stopwords)
    word_count = sum(len(s.tokens) for s in sentences)
    return Document(
        id=doc_id, raw=raw, sentences=tuple(sentences), word_count=word_count
    )


def ngrams(tokens: Sequence[str], n: int) -> Counter:
    """All contiguous n-token windows as a multiset of tuples."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return Counter(
        tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)
    )
