"""Topic modeling by collapsed Gibbs sampling and the topic rank extractor.

Training reassigns one token-topic at a time, sampling each new topic in
proportion to (doc-topic count + alpha) * (topic-word count + beta) /
(topic total + V*beta), with the current token excluded from all counts.
Sampling is sequential and fully determined by the seed. Unseen documents
are folded in against the frozen topic-word counts, so summarization never
retrains.

Sentence topic vectors average the per-word topic posteriors p(t|w), and a
sentence ranks higher the closer its vector lies to the document's inferred
topic mixture (Euclidean distance, earlier position winning ties).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DataError, InvariantError
from .ranker import rank_by_score
from .textproc import Document, Sentence

MODEL_MAGIC = "LDAMODEL"
MODEL_VERSION = 1


@dataclass
class TopicModel:
    """Frozen state of a trained topic model."""

    num_topics: int
    vocab: dict[str, int]
    topic_word_counts: np.ndarray  # (num_topics, vocab size) int64
    topic_totals: np.ndarray  # (num_topics,) int64
    alpha: float
    beta: float
    seed: int
    iterations: int = 0

    @property
    def vocab_size(self) -> int:
        return len(self.vocab)

    def validate(self) -> None:
        counts = self.topic_word_counts
        if counts.shape != (self.num_topics, self.vocab_size):
            raise InvariantError(
                f"count matrix shape {counts.shape} does not match "
                f"{self.num_topics} topics x {self.vocab_size} words"
            )
        if (counts < 0).any():
            raise InvariantError("negative topic-word count")
        if not np.array_equal(counts.sum(axis=1), self.topic_totals):
            raise InvariantError("topic totals do not match count row sums")
        if sorted(self.vocab.values()) != list(range(self.vocab_size)):
            raise InvariantError("vocabulary indices are not dense")


def build_vocabulary(
    docs: Sequence[Document], min_doc_freq: int = 2
) -> dict[str, int]:
    """Map content tokens with document frequency >= min_doc_freq to ids."""
    doc_freq: Counter = Counter()
    for doc in docs:
        seen = set()
        for sentence in doc.sentences:
            seen.update(sentence.content_tokens)
        doc_freq.update(seen)
    words = sorted(w for w, f in doc_freq.items() if f >= min_doc_freq)
    return {w: i for i, w in enumerate(words)}


def _token_ids(doc: Document, vocab: dict[str, int]) -> np.ndarray:
    ids = [
        vocab[t]
        for sentence in doc.sentences
        for t in sentence.content_tokens
        if t in vocab
    ]
    return np.asarray(ids, dtype=np.int64)


def _sample_topic(p: np.ndarray, u: float) -> int:
    cum = np.cumsum(p)
    z = int(np.searchsorted(cum, u * cum[-1], side="right"))
    return min(z, p.shape[0] - 1)


def train_lda(
    docs: Sequence[Document],
    num_topics: int,
    alpha: float | None = None,
    beta: float = 0.01,
    iterations: int = 500,
    seed: int = 0,
    min_doc_freq: int = 2,
) -> TopicModel:
    """Fit a topic model on a corpus with collapsed Gibbs sampling.

    alpha defaults to 50 / num_topics. Identical corpus, hyperparameters,
    and seed reproduce the model bit for bit.
    """
    if not docs:
        raise DataError("cannot train on an empty corpus")
    if num_topics < 2:
        raise DataError(f"num_topics must be >= 2, got {num_topics}")
    if alpha is None:
        alpha = 50.0 / num_topics
    if alpha <= 0 or beta <= 0:
        raise DataError(f"alpha and beta must be positive, got {alpha}, {beta}")
    if iterations < 1:
        raise DataError(f"iterations must be >= 1, got {iterations}")

    vocab = build_vocabulary(docs, min_doc_freq)
    doc_tokens = [_token_ids(doc, vocab) for doc in docs]
    if not vocab or not any(t.size for t in doc_tokens):
        raise DataError("no trainable tokens")

    q = num_topics
    v = len(vocab)
    rng = np.random.default_rng(seed)
    n_tw = np.zeros((q, v), dtype=np.int64)
    doc_topic = []  # per-doc float counts with alpha baked in
    assignments = []
    for tokens in doc_tokens:
        z = rng.integers(0, q, size=tokens.shape[0])
        assignments.append(z)
        np.add.at(n_tw, (z, tokens), 1)
        doc_topic.append(np.bincount(z, minlength=q) + alpha)

    # Sampling works on float copies with the priors baked in; the +-1
    # updates stay exact for any realistic count magnitude, so the integer
    # state is recovered exactly afterwards.
    word_topic = np.asfortranarray(n_tw + beta, dtype=float)
    totals = n_tw.sum(axis=1) + v * beta
    for _ in range(iterations):
        for d, tokens in enumerate(doc_tokens):
            if not tokens.size:
                continue
            z_d = assignments[d]
            dt = doc_topic[d]
            u = rng.random(tokens.shape[0])
            for i in range(tokens.shape[0]):
                col = word_topic[:, tokens[i]]
                z = z_d[i]
                dt[z] -= 1.0
                col[z] -= 1.0
                totals[z] -= 1.0
                p = dt * col / totals
                z = _sample_topic(p, u[i])
                z_d[i] = z
                dt[z] += 1.0
                col[z] += 1.0
                totals[z] += 1.0

    n_tw = np.rint(word_topic - beta).astype(np.int64)
    model = TopicModel(
        num_topics=q,
        vocab=vocab,
        topic_word_counts=n_tw,
        topic_totals=n_tw.sum(axis=1),
        alpha=float(alpha),
        beta=float(beta),
        seed=seed,
        iterations=iterations,
    )
    model.validate()
    return model


def infer_doc_topic(
    model: TopicModel,
    doc: Document,
    fold_in_iterations: int = 50,
    seed: int = 0,
) -> np.ndarray:
    """Infer a document's topic mixture against frozen topic-word counts.

    Out-of-vocabulary words are skipped; a document with no known words
    gets the uniform mixture. The result is the smoothed, normalized
    doc-topic count vector and always sums to 1.
    """
    q = model.num_topics
    tokens = _token_ids(doc, model.vocab)
    if not tokens.size:
        return np.full(q, 1.0 / q)

    word_factor = np.asfortranarray(
        (model.topic_word_counts + model.beta)
        / (model.topic_totals + model.vocab_size * model.beta)[:, None]
    )
    rng = np.random.default_rng(seed)
    z = rng.integers(0, q, size=tokens.shape[0])
    dt = np.bincount(z, minlength=q) + model.alpha
    for _ in range(fold_in_iterations):
        u = rng.random(tokens.shape[0])
        for i in range(tokens.shape[0]):
            dt[z[i]] -= 1.0
            p = dt * word_factor[:, tokens[i]]
            z[i] = _sample_topic(p, u[i])
            dt[z[i]] += 1.0
    return dt / (tokens.shape[0] + q * model.alpha)


def word_topic_matrix(model: TopicModel) -> np.ndarray:
    """Per-word topic posteriors: column w holds smoothed p(t | w)."""
    counts = model.topic_word_counts
    denom = counts.sum(axis=0) + model.num_topics * model.beta
    return (counts + model.beta) / denom


def sentence_topic_vector(
    model: TopicModel,
    sentence: Sentence,
    word_topics: np.ndarray | None = None,
) -> np.ndarray:
    """Mean of the topic vectors of the sentence's in-vocabulary words.

    A sentence with no in-vocabulary words gets the uniform vector.
    """
    if word_topics is None:
        word_topics = word_topic_matrix(model)
    ids = [
        model.vocab[t] for t in sentence.content_tokens if t in model.vocab
    ]
    if not ids:
        return np.full(model.num_topics, 1.0 / model.num_topics)
    return word_topics[:, ids].mean(axis=1)


def rank_by_closeness(
    sentence_vectors: Sequence[np.ndarray], doc_vector: np.ndarray
) -> np.ndarray:
    """Rank sentences by Euclidean closeness to the document topic vector.

    The smallest distance gets the highest rank N; exact distance ties go
    to the earlier sentence.
    """
    distances = np.array([
        np.linalg.norm(np.asarray(v, dtype=float) - doc_vector)
        for v in sentence_vectors
    ])
    return rank_by_score(-distances)


def topic_rank(
    model: TopicModel,
    doc: Document,
    fold_in_iterations: int = 50,
    seed: int = 0,
) -> np.ndarray:
    """Rank sentences by closeness of their topic vector to the document's."""
    if not doc.sentences:
        return np.zeros(0, dtype=np.int64)
    doc_vector = infer_doc_topic(model, doc, fold_in_iterations, seed)
    word_topics = word_topic_matrix(model)
    vectors = [
        sentence_topic_vector(model, s, word_topics) for s in doc.sentences
    ]
    return rank_by_closeness(vectors, doc_vector)


def save_model(model: TopicModel, path: str) -> None:
    """Write the versioned line-oriented model format (round-trip exact)."""
    model.validate()
    lines = [
        f"{MODEL_MAGIC} {MODEL_VERSION} {model.num_topics} {model.vocab_size} "
        f"{model.alpha!r} {model.beta!r} {model.seed}"
    ]
    for word, idx in sorted(model.vocab.items(), key=lambda kv: kv[1]):
        lines.append(f"{word} {idx}")
    for row in model.topic_word_counts:
        lines.append(" ".join(str(int(c)) for c in row))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_model(path: str) -> TopicModel:
    """Read a model written by save_model."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise DataError(f"cannot read model file {path!r}: {exc}") from exc
    if not lines:
        raise DataError(f"model file {path!r} is empty")
    header = lines[0].split()
    if len(header) != 7 or header[0] != MODEL_MAGIC:
        raise DataError(f"model file {path!r} has a malformed header")
    if int(header[1]) != MODEL_VERSION:
        raise DataError(
            f"unsupported model version {header[1]} in {path!r}"
        )
    q, v = int(header[2]), int(header[3])
    alpha, beta, seed = float(header[4]), float(header[5]), int(header[6])
    if len(lines) != 1 + v + q:
        raise DataError(
            f"model file {path!r} has {len(lines)} lines, expected {1 + v + q}"
        )
    vocab = {}
    for line in lines[1 : 1 + v]:
        word, idx = line.rsplit(" ", 1)
        vocab[word] = int(idx)
    counts = np.array(
        [[int(c) for c in line.split()] for line in lines[1 + v :]],
        dtype=np.int64,
    ).reshape(q, v)
    model = TopicModel(
        num_topics=q,
        vocab=vocab,
        topic_word_counts=counts,
        topic_totals=counts.sum(axis=1),
        alpha=alpha,
        beta=beta,
        seed=seed,
    )
    model.validate()
    return model
