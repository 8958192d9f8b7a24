"""Independent reference implementations used to cross-check the library.

Everything here is deliberately naive and self-contained (no imports from
the package's algorithm internals) so that agreement between the two
routes is meaningful.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

import numpy as np


def lcs_oracle(a, b):
    """Longest common subsequence length by exhaustive enumeration."""
    if len(a) > len(b):
        a, b = b, a
    best = 0
    for size in range(len(a), 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(a, size):
            it = iter(b)
            if all(x in it for x in combo):
                best = size
                break
    return best


def pagerank_oracle(nodes, weights, damping, iterations=5000, tol=1e-14):
    """Dense power iteration on the explicit transition matrix.

    nodes: ordered node labels; weights: {(a, b): w} with both directions
    present. Dangling mass is spread uniformly.
    """
    n = len(nodes)
    index = {v: i for i, v in enumerate(nodes)}
    transition = np.zeros((n, n))
    out = np.zeros(n)
    for (a, b), w in weights.items():
        out[index[a]] += w
    for (a, b), w in weights.items():
        transition[index[b], index[a]] = w / out[index[a]]
    dangling = out == 0.0

    p = np.full(n, 1.0 / n)
    for _ in range(iterations):
        p_next = (1 - damping) / n + damping * (
            transition @ p + p[dangling].sum() / n
        )
        if np.abs(p_next - p).sum() < tol:
            return p_next
        p = p_next
    return p


def _cosine(u, v):
    dot = sum(x * y for x, y in zip(u, v))
    nu = math.sqrt(sum(x * x for x in u))
    nv = math.sqrt(sum(x * x for x in v))
    if nu == 0.0 or nv == 0.0:
        return 0.0
    return dot / (nu * nv)


def _shared_ngrams(tokens_a, tokens_b):
    total = 0
    for n in (2, 3):
        ca = Counter(tuple(tokens_a[i:i + n]) for i in range(len(tokens_a) - n + 1))
        cb = Counter(tuple(tokens_b[i:i + n]) for i in range(len(tokens_b) - n + 1))
        total += sum(min(ca[g], cb[g]) for g in ca)
    return total


def summary_oracle(
    sentence_texts,
    content_tokens,
    scores,
    embeddings,
    t1,
    t2,
    sentence_budget=None,
    word_budget=None,
    novelty=True,
    conjunction=False,
):
    """Sort by (score, earlier position) and greedily filter; returns indices."""
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    picked = []
    words = 0
    for i in order:
        if sentence_budget is not None and len(picked) >= sentence_budget:
            break
        if novelty:
            ok = True
            for j in picked:
                sim = _cosine(embeddings[i], embeddings[j])
                count = _shared_ngrams(content_tokens[i], content_tokens[j])
                if conjunction:
                    pair = sim < t1 and count < t2
                else:
                    pair = sim < t1 or count < t2
                if not pair:
                    ok = False
                    break
            if not ok:
                continue
        if word_budget is not None:
            w = len(sentence_texts[i].split())
            if picked and words + w > word_budget:
                continue
            words += w
        picked.append(i)
    return picked
