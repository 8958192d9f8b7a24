"""ROUGE scoring and the batch evaluation report.

Builds a toy corpus with references, trains a small model, scores the
fused system against each extractor alone, and writes the CSV report the
`ranksum evaluate` command produces (plus the SVG chart).
"""

import os
import tempfile

import numpy as np

from ranksum import (
    Corpus,
    HashEmbedder,
    RunConfig,
    evaluate_corpus,
    evaluate_multi_ref,
    parse_document,
    rouge_l,
    rouge_n,
    train_lda,
)
from ranksum.rouge import plot_report, write_report_csv

# --- the metrics themselves -------------------------------------------------
candidate = "the storm flooded the coastal road overnight"
reference = "a storm flooded coastal roads"
print("ROUGE-1:", rouge_n(candidate, reference, 1))
print("ROUGE-2:", rouge_n(candidate, reference, 2))
print("ROUGE-L:", rouge_l(candidate, reference))

best = evaluate_multi_ref(
    candidate,
    ["rain closed the harbor", "a storm flooded coastal roads"],
    metric="rouge1",
)
print("best of two references (by F1):", best)

# --- a corpus-level report ---------------------------------------------------
rng = np.random.default_rng(1)
pool = [f"term{i}" for i in range(30)]
documents, references = [], {}
for d in range(6):
    sentences = [" ".join(rng.choice(pool, size=6)) + "." for _ in range(6)]
    doc = parse_document(f"doc{d}", " ".join(sentences))
    documents.append(doc)
    references[doc.id] = (" ".join(sentences[:2]),)
corpus = Corpus(documents=tuple(documents), references=references)

model = train_lda(corpus.documents, num_topics=2, alpha=0.1, beta=0.01,
                  iterations=50, seed=0)
cfg = RunConfig()
cfg.fusion.sentence_budget = 2
cfg.lda.fold_in_iterations = 10

rows = evaluate_corpus(corpus, model, HashEmbedder(dim=32, seed=0), cfg,
                       per_extractor=True)
out_dir = tempfile.mkdtemp(prefix="ranksum_demo_")
csv_path = os.path.join(out_dir, "report.csv")
svg_path = os.path.join(out_dir, "report.svg")
write_report_csv(rows, csv_path)
plot_report(rows, svg_path)

print(f"\nwrote {csv_path} and {svg_path}")
print("mean ROUGE-1 by extractor:")
by_extractor = {}
for row in rows:
    by_extractor.setdefault(row["extractor"], []).append(row["rouge1"])
for name, values in sorted(by_extractor.items()):
    print(f"  {name:10s} {float(np.mean(values)):.3f}")
