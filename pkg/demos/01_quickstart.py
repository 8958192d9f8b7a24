"""End-to-end walkthrough: train a topic model, rank, fuse, summarize.

Everything runs on a small corpus built inline, so this script needs no
data files and finishes in a couple of seconds.
"""

import numpy as np

from ranksum import (
    HashEmbedder,
    RunConfig,
    parse_document,
    summarize_document,
    summary_json,
    train_lda,
)

rng = np.random.default_rng(0)

# A miniature "news" corpus: finance stories and weather stories. The topic
# model only needs enough co-occurrence signal to tell the two apart.
finance = ["market", "trade", "price", "stock", "profit", "bank", "growth"]
weather = ["storm", "rain", "flood", "wind", "coast", "river", "cloud"]

corpus = []
for d in range(30):
    words = finance if d % 2 == 0 else weather
    sentences = [
        " ".join(rng.choice(words, size=6)) + "." for _ in range(6)
    ]
    corpus.append(parse_document(f"train{d}", " ".join(sentences)))

print("training a 2-topic model on", len(corpus), "documents ...")
model = train_lda(corpus, num_topics=2, alpha=0.1, beta=0.01,
                  iterations=100, seed=0)
print("vocabulary size:", model.vocab_size)

# Now summarize an unseen article. Note the repeated storm vocabulary, the
# keyword-ish "delta basin" pair, and the throwaway middle sentences.
article = parse_document("article", (
    "Flood warnings spread along the coast as the storm pushed rain inland. "
    "Officials opened a shelter near the delta basin river crossing. "
    "A local bakery kept its morning schedule. "
    "Visitors photographed the old lighthouse stairs. "
    "The delta basin flood level rose as wind and rain battered the coast. "
    "Forecasters said the storm would weaken by morning."
))

cfg = RunConfig()
cfg.fusion.sentence_budget = 2
cfg.lda.fold_in_iterations = 30

summary, bundle = summarize_document(article, model, HashEmbedder(dim=64, seed=0), cfg)

print("\nper-sentence rank vectors (higher = more salient):")
print("  topic    ", bundle.topic)
print("  keyword  ", bundle.keyword)
print("  embedding", bundle.embedding)
print("  position ", bundle.position)

print("\nchosen summary:")
print(summary.text)

print("\nexplanation payload:")
print(summary_json(article, summary, bundle))
