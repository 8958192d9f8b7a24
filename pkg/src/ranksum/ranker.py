"""Rank vectors, weighted rank fusion, novelty filtering, summary assembly.

A rank vector for an N-sentence document is a permutation of 1..N where
index i holds the rank of sentence i and N is the best (most salient) rank.
All tie-breaks in this package resolve in favor of the earlier document
position.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import DataError, InvariantError
from .textproc import Document, ngrams


@dataclass
class FusionConfig:
    """Fusion weights, novelty thresholds, and the summary budget.

    Exactly one of sentence_budget / word_budget must be set. The novelty
    test accepts a candidate against each already-selected sentence when
    similarity < t1 OR shared bigram+trigram count < t2; setting
    novelty_conjunction=True switches the OR to an AND (stricter), and
    novelty_enabled=False skips the test entirely.
    """

    alpha: float = 0.3
    beta: float = 0.35
    gamma: float = 0.34
    delta: float = 0.01
    t1: float = 0.8
    t2: int = 3
    sentence_budget: int | None = 3
    word_budget: int | None = None
    novelty_enabled: bool = True
    novelty_conjunction: bool = False

    @property
    def weights(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def validate(self) -> None:
        if any(w < 0 for w in self.weights):
            raise DataError(f"fusion weights must be nonnegative: {self.weights}")
        if sum(self.weights) <= 0:
            raise DataError("fusion weights must not all be zero")
        if not -1.0 <= self.t1 <= 1.0:
            raise DataError(f"t1 must lie in [-1, 1], got {self.t1}")
        if self.t2 < 0:
            raise DataError(f"t2 must be >= 0, got {self.t2}")
        set_budgets = [
            b for b in (self.sentence_budget, self.word_budget) if b is not None
        ]
        if len(set_budgets) != 1:
            raise DataError(
                "exactly one of sentence_budget / word_budget must be set"
            )
        if set_budgets[0] < 1:
            raise DataError(f"budget must be >= 1, got {set_budgets[0]}")

    def with_weights(self, weights: Sequence[float]) -> "FusionConfig":
        a, b, g, d = weights
        return replace(self, alpha=a, beta=b, gamma=g, delta=d)


@dataclass(frozen=True)
class SelectedSentence:
    index: int
    score: float


@dataclass(frozen=True)
class Summary:
    """Sentences admitted to the summary, with their fused scores."""

    doc_id: str
    selected: tuple[SelectedSentence, ...]
    text: str

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(s.index for s in self.selected)


def rank_by_score(scores: Sequence[float]) -> np.ndarray:
    """Turn saliency scores into a rank permutation of 1..N.

    Larger scores receive higher (better) ranks; exact ties are broken by
    the earlier position taking the higher rank.
    """
    scores = np.asarray(scores, dtype=float)
    n = scores.shape[0]
    order = np.lexsort((np.arange(n), -scores))
    ranks = np.empty(n, dtype=np.int64)
    ranks[order] = np.arange(n, 0, -1)
    return ranks


def is_rank_vector(ranks: np.ndarray) -> bool:
    ranks = np.asarray(ranks)
    n = ranks.shape[0]
    return bool(np.array_equal(np.sort(ranks), np.arange(1, n + 1)))


def position_rank(n: int) -> np.ndarray:
    """Rank by position alone: the first sentence gets rank n, the last 1."""
    if n < 0:
        raise DataError(f"sentence count must be >= 0, got {n}")
    return np.arange(n, 0, -1, dtype=np.int64)


def fuse_ranks(
    rt: np.ndarray,
    rk: np.ndarray,
    re: np.ndarray,
    rp: np.ndarray,
    cfg: FusionConfig,
) -> np.ndarray:
    """Weighted sum of the four per-sentence rank vectors."""
    vectors = [np.asarray(v, dtype=float) for v in (rt, rk, re, rp)]
    n = vectors[0].shape[0]
    if any(v.shape != (n,) for v in vectors):
        raise DataError(
            f"rank vectors must share one length, got {[v.shape for v in vectors]}"
        )
    a, b, g, d = cfg.weights
    return a * vectors[0] + b * vectors[1] + g * vectors[2] + d * vectors[3]


def cosine_similarity(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine of the angle between u and v; 0.0 if either vector is zero."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise DataError(f"dimension mismatch: {u.shape} vs {v.shape}")
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return float(np.dot(u, v) / (nu * nv))


def ngram_overlap_count(
    tokens_a: Sequence[str], tokens_b: Sequence[str]
) -> int:
    """Shared bigram plus trigram instances (multiset intersection sizes)."""
    total = 0
    for n in (2, 3):
        total += sum((ngrams(tokens_a, n) & ngrams(tokens_b, n)).values())
    return total


def novelty_check(
    candidate: int,
    selected: Sequence[int],
    embeddings: np.ndarray,
    content_tokens: Sequence[Sequence[str]],
    cfg: FusionConfig,
) -> bool:
    """True when the candidate is novel against every selected sentence.

    Per pair the candidate passes if similarity < t1 or shared n-gram
    count < t2 (AND of the two with novelty_conjunction). An empty
    selection is vacuously novel.
    """
    if candidate in selected:
        raise InvariantError(f"candidate {candidate} already selected")
    for j in selected:
        sim = cosine_similarity(embeddings[candidate], embeddings[j])
        count = ngram_overlap_count(content_tokens[candidate], content_tokens[j])
        if cfg.novelty_conjunction:
            novel_pair = sim < cfg.t1 and count < cfg.t2
        else:
            novel_pair = sim < cfg.t1 or count < cfg.t2
        if not novel_pair:
            return False
    return True


def generate_summary(
    doc: Document,
    scores: Sequence[float],
    embeddings: np.ndarray,
    cfg: FusionConfig,
    original_order: bool = False,
) -> Summary:
    """Greedily admit sentences by descending fused score under the budget.

    Candidates failing the novelty test are skipped. With a word budget,
    a sentence that would push the summary past the limit is skipped (the
    scan continues), except that the first admitted sentence is always
    kept so the summary is never empty.
    """
    scores = np.asarray(scores, dtype=float)
    n = scores.shape[0]
    if n != len(doc.sentences):
        raise DataError(
            f"got {n} scores for {len(doc.sentences)} sentences"
        )
    cfg.validate()

    content = [s.content_tokens for s in doc.sentences]
    order = np.lexsort((np.arange(n), -scores))
    selected: list[int] = []
    words_used = 0
    for i in map(int, order):
        if cfg.sentence_budget is not None and len(selected) >= cfg.sentence_budget:
            break
        if cfg.novelty_enabled and not novelty_check(
            i, selected, embeddings, content, cfg
        ):
            continue
        if cfg.word_budget is not None:
            sentence_words = len(doc.sentences[i].text.split())
            if selected and words_used + sentence_words > cfg.word_budget:
                continue
            words_used += sentence_words
        selected.append(i)

    if original_order:
        selected.sort()
    chosen = tuple(
        SelectedSentence(index=i, score=float(scores[i])) for i in selected
    )
    text = "\n".join(doc.sentences[i].text for i in selected)
    return Summary(doc_id=doc.id, selected=chosen, text=text)
