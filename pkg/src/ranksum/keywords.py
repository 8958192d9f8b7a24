"""Keyword extraction on a word co-occurrence graph and the keyword rank.

The graph is built per document over stemmed content tokens: an undirected
edge gains weight 1 for every ordered pair of tokens falling inside a
sliding window (sentence boundaries are not crossed). Node importance is a
weighted PageRank; the top share of nodes becomes the keyword set, and
sentences rank by how many keyword occurrences they contain.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .ranker import rank_by_score
from .textproc import Document


@dataclass(frozen=True)
class WordGraph:
    """Undirected weighted co-occurrence graph over content words."""

    nodes: tuple[str, ...]
    weights: dict[str, dict[str, int]]

    def edge_weight(self, a: str, b: str) -> int:
        return self.weights.get(a, {}).get(b, 0)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.weights.values()) // 2


@dataclass(frozen=True)
class KeywordSet:
    """Keywords ordered by descending score."""

    words: tuple[str, ...]
    scores: tuple[float, ...]

    @property
    def members(self) -> frozenset[str]:
        return frozenset(self.words)

    def __len__(self) -> int:
        return len(self.words)


def build_cooccurrence_graph(doc: Document, window: int = 4) -> WordGraph:
    """Count co-occurrences of content tokens within a sliding window."""
    if window < 2:
        raise DataError(f"window must be >= 2, got {window}")
    weights: dict[str, dict[str, int]] = defaultdict(lambda: defaultdict(int))
    nodes: set[str] = set()
    for sentence in doc.sentences:
        stream = sentence.content_tokens
        nodes.update(stream)
        for i in range(len(stream)):
            for j in range(i + 1, min(i + window, len(stream))):
                a, b = stream[i], stream[j]
                if a == b:
                    continue
                weights[a][b] += 1
                weights[b][a] += 1
    return WordGraph(
        nodes=tuple(sorted(nodes)),
        weights={a: dict(nbrs) for a, nbrs in weights.items()},
    )


def pagerank(
    graph: WordGraph,
    damping: float = 0.85,
    epsilon: float = 1e-6,
    max_iterations: int = 100,
) -> dict[str, float]:
    """Stationary scores of a damped random walk on the weighted graph.

    Mass leaving a node is split in proportion to edge weights; mass at
    isolated nodes is redistributed uniformly. Scores sum to 1.
    """
    if not 0.0 < damping < 1.0:
        raise DataError(f"damping must lie in (0, 1), got {damping}")
    if epsilon <= 0.0:
        raise DataError(f"epsilon must be positive, got {epsilon}")
    n = len(graph.nodes)
    if n == 0:
        return {}
    index = {word: i for i, word in enumerate(graph.nodes)}

    src, dst, weight = [], [], []
    for a, nbrs in graph.weights.items():
        for b, w in nbrs.items():
            src.append(index[a])
            dst.append(index[b])
            weight.append(w)
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    weight = np.asarray(weight, dtype=float)

    out_weight = np.zeros(n)
    np.add.at(out_weight, src, weight)
    dangling = out_weight == 0.0
    share = np.zeros_like(weight)
    if weight.size:
        share = weight / out_weight[src]

    p = np.full(n, 1.0 / n)
    for _ in range(max_iterations):
        inbound = np.bincount(dst, weights=share * p[src], minlength=n)
        dangling_mass = p[dangling].sum()
        p_next = (1.0 - damping) / n + damping * (inbound + dangling_mass / n)
        if np.abs(p_next - p).sum() < epsilon:
            p = p_next
            break
        p = p_next
    return {word: float(p[i]) for word, i in index.items()}


def extract_keywords(
    doc: Document,
    window: int = 4,
    damping: float = 0.85,
    epsilon: float = 1e-6,
    max_iterations: int = 100,
    ratio: float = 0.2,
) -> KeywordSet:
    """Select the top share of graph nodes by PageRank score.

    The keyword count is ceil(ratio * node count), at least 1 for any
    non-empty graph. Score ties order alphabetically for determinism.
    """
    if not 0.0 < ratio <= 1.0:
        raise DataError(f"keyword ratio must lie in (0, 1], got {ratio}")
    graph = build_cooccurrence_graph(doc, window)
    scores = pagerank(graph, damping, epsilon, max_iterations)
    if not scores:
        return KeywordSet(words=(), scores=())
    k = max(1, math.ceil(ratio * len(graph.nodes)))
    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return KeywordSet(
        words=tuple(w for w, _ in ranked),
        scores=tuple(s for _, s in ranked),
    )


def keyword_rank(
    doc: Document, keywords: KeywordSet, count_distinct: bool = False
) -> np.ndarray:
    """Rank sentences by how many keyword occurrences they contain.

    By default repeated occurrences count repeatedly; count_distinct=True
    counts each keyword type once per sentence. Equal counts fall back to
    document position.
    """
    members = keywords.members
    counts = []
    for sentence in doc.sentences:
        if count_distinct:
            counts.append(len(members.intersection(sentence.content_tokens)))
        else:
            counts.append(
                sum(1 for t in sentence.content_tokens if t in members)
            )
    return rank_by_score(counts)
