"""Weighted rank fusion and the novelty filter on a crafted example."""

import numpy as np

from ranksum import (
    FusionConfig,
    HashEmbedder,
    fuse_ranks,
    generate_summary,
    ngram_overlap_count,
    cosine_similarity,
    parse_document,
    position_rank,
    rank_by_score,
)

doc = parse_document("article", (
    "The reactor test exceeded every efficiency target set this year. "
    "The reactor test exceeded every efficiency target set this year. "
    "Engineers logged the coolant readings after each run. "
    "A separate memo described the staffing plan for autumn. "
    "Visitors from the ministry observed the final demonstration."
))
n = len(doc.sentences)
embeddings = HashEmbedder(dim=64, seed=0).embed_document(doc)

# Hand-built rank vectors stand in for the four extractors here (see
# demo 01 for the real pipeline). Sentence 0 and its verbatim duplicate
# share every feature except position.
rt = np.array([5, 4, 3, 1, 2])
rk = np.array([5, 4, 2, 1, 3])
re = np.array([4, 3, 5, 1, 2])
rp = position_rank(n)

cfg = FusionConfig(sentence_budget=3)
scores = fuse_ranks(rt, rk, re, rp, cfg)
print("fused scores:", np.round(scores, 3))
print("fused rank vector:", rank_by_score(scores))

sim = cosine_similarity(embeddings[0], embeddings[1])
shared = ngram_overlap_count(
    doc.sentences[0].content_tokens, doc.sentences[1].content_tokens
)
print(f"\nduplicate pair: cosine={sim:.2f}, shared bigrams+trigrams={shared}")
print(f"novelty test (t1={cfg.t1}, t2={cfg.t2}): both clauses fail, so the "
      "second copy is redundant")

summary = generate_summary(doc, scores, embeddings, cfg)
print("\nsummary with novelty filtering:")
print(summary.text)

relaxed = FusionConfig(sentence_budget=3, novelty_enabled=False)
duplicated = generate_summary(doc, scores, embeddings, relaxed)
print("\nsame budget with the filter disabled (duplicate slips in):")
print(duplicated.text)
