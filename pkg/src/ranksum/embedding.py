"""Sentence embedding providers and the semantic rank extractor.

Embeddings enter through a provider contract so any offline encoder can be
plugged in: providers expose ``dim`` and ``embed_document`` returning one
vector per sentence. Two providers ship here: a deterministic hashing
baseline that needs no model files, and a reader for precomputed vectors
exported to JSON Lines.

The semantic rank measures how far the document centroid moves when one
sentence is left out: sentences whose removal displaces the centroid most
are ranked highest.
"""

from __future__ import annotations

import hashlib
import json
from typing import Protocol

import numpy as np

from .errors import DataError
from .ranker import rank_by_score
from .textproc import Document, tokenize


class EmbeddingProvider(Protocol):
    """Anything that can embed a document's sentences."""

    @property
    def dim(self) -> int: ...

    def embed_document(self, doc: Document) -> np.ndarray: ...


class HashEmbedder:
    """Deterministic baseline embedder keyed by token hashes.

    Each token gets a fixed standard-normal vector seeded from a stable
    hash of (seed, token); a sentence embedding is the L2-normalized mean
    of its token vectors, and a sentence with no tokens embeds to zero.
    """

    def __init__(self, dim: int = 64, seed: int = 0):
        if dim < 2:
            raise DataError(f"embedding dim must be >= 2, got {dim}")
        self._dim = dim
        self.seed = seed
        self._token_cache: dict[str, np.ndarray] = {}

    @property
    def dim(self) -> int:
        return self._dim

    def _token_vector(self, token: str) -> np.ndarray:
        vec = self._token_cache.get(token)
        if vec is None:
            digest = hashlib.blake2b(
                f"{self.seed}:{token}".encode("utf-8"), digest_size=8
            ).digest()
            rng = np.random.default_rng(int.from_bytes(digest, "big"))
            vec = rng.standard_normal(self._dim)
            self._token_cache[token] = vec
        return vec

    def embed(self, text: str) -> np.ndarray:
        tokens = tokenize(text)
        if not tokens:
            return np.zeros(self._dim)
        mean = np.mean([self._token_vector(t) for t in tokens], axis=0)
        norm = np.linalg.norm(mean)
        if norm == 0.0:
            return np.zeros(self._dim)
        return mean / norm

    def embed_document(self, doc: Document) -> np.ndarray:
        if not doc.sentences:
            return np.zeros((0, self._dim))
        return np.stack([self.embed(s.text) for s in doc.sentences])


class PrecomputedEmbeddings:
    """Sentence vectors exported offline, keyed by (doc id, sentence index).

    File format: UTF-8 JSON Lines, one record per sentence:
    ``{"doc_id": str, "sentence_index": int, "vector": [float, ...]}``.
    Every vector in a file must share one dimensionality.
    """

    def __init__(self, vectors: dict[tuple[str, int], np.ndarray], dim: int):
        self._vectors = vectors
        self._dim = dim

    @property
    def dim(self) -> int:
        return self._dim

    @classmethod
    def from_jsonl(cls, path: str) -> "PrecomputedEmbeddings":
        vectors: dict[tuple[str, int], np.ndarray] = {}
        dim = None
        try:
            with open(path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        record = json.loads(line)
                        key = (record["doc_id"], int(record["sentence_index"]))
                        vec = np.asarray(record["vector"], dtype=float)
                    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                        raise DataError(
                            f"{path}:{lineno}: malformed embedding record: {exc}"
                        ) from exc
                    if vec.ndim != 1:
                        raise DataError(
                            f"{path}:{lineno}: vector must be a flat list"
                        )
                    if dim is None:
                        dim = vec.shape[0]
                    elif vec.shape[0] != dim:
                        raise DataError(
                            f"{path}:{lineno}: vector has dim {vec.shape[0]}, "
                            f"expected {dim}"
                        )
                    if key in vectors:
                        raise DataError(
                            f"{path}:{lineno}: duplicate embedding for "
                            f"doc {key[0]!r} sentence {key[1]}"
                        )
                    vectors[key] = vec
        except OSError as exc:
            raise DataError(f"cannot read embeddings file {path!r}: {exc}") from exc
        if dim is None:
            raise DataError(f"embeddings file {path!r} contains no records")
        return cls(vectors, dim)

    def lookup(self, doc_id: str, index: int) -> np.ndarray:
        try:
            return self._vectors[(doc_id, index)]
        except KeyError:
            raise DataError(
                f"no embedding for doc {doc_id!r} sentence {index}"
            ) from None

    def embed_document(self, doc: Document) -> np.ndarray:
        if not doc.sentences:
            return np.zeros((0, self._dim))
        return np.stack([self.lookup(doc.id, s.index) for s in doc.sentences])


def document_embedding(sentence_vectors: np.ndarray) -> np.ndarray:
    """Document centroid: the arithmetic mean of its sentence vectors."""
    vectors = _as_matrix(sentence_vectors)
    if vectors.shape[0] == 0:
        raise DataError("cannot embed a document with no sentences")
    return vectors.mean(axis=0)


def semantic_rank(sentence_vectors: np.ndarray) -> np.ndarray:
    """Rank sentences by leave-one-out displacement of the centroid.

    For each sentence the centroid of the remaining N-1 vectors is compared
    with the full centroid; larger displacement ranks higher. A single
    sentence gets rank 1 (its displacement is defined as 0).
    """
    vectors = _as_matrix(sentence_vectors)
    n = vectors.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if n == 1:
        return np.ones(1, dtype=np.int64)
    if n == 2:
        # both displacements equal |v0 - v1| / 2 exactly; computing them as
        # one value keeps the tie bit-exact for the position tie-break
        d = float(np.linalg.norm(vectors[0] - vectors[1])) / 2.0
        return rank_by_score([d, d])
    centroid = vectors.mean(axis=0)
    # leave-one-out mean is (n*c - v_i)/(n-1), so its distance from the
    # centroid reduces to |v_i - c|/(n-1); identical rows get identical
    # displacements, keeping the position tie-break stable
    displacement = np.linalg.norm(vectors - centroid, axis=1) / (n - 1)
    return rank_by_score(displacement)


def _as_matrix(sentence_vectors) -> np.ndarray:
    try:
        vectors = np.asarray(sentence_vectors, dtype=float)
    except ValueError as exc:
        raise DataError(
            f"sentence vectors have mismatched dimensions: {exc}"
        ) from exc
    if vectors.ndim != 2:
        raise DataError(
            "sentence vectors must form an (N, dim) matrix with one shared "
            "dimensionality"
        )
    return vectors
