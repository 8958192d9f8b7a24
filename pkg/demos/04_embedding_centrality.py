"""Leave-one-out centroid displacement as a saliency signal.

Removing a sentence and seeing how far the document centroid moves is a
cheap centrality measure: distinctive, load-bearing sentences move it
most, near-duplicates barely move it at all.
"""

import numpy as np

from ranksum import HashEmbedder, parse_document, semantic_rank

doc = parse_document("article", (
    "The expedition mapped the glacier's hidden crevasse network. "
    "Camp routines stayed the same through the week. "
    "Meals were cooked on the same small stove each night. "
    "The team slept early and woke before dawn most days. "
    "A sudden icefall buried the survey cache under tons of debris."
))

embedder = HashEmbedder(dim=64, seed=0)
vectors = embedder.embed_document(doc)

n = len(doc.sentences)
centroid = vectors.mean(axis=0)
print("leave-one-out centroid displacement per sentence:")
for i in range(n):
    loo = (n * centroid - vectors[i]) / (n - 1)
    d = np.linalg.norm(centroid - loo)
    print(f"  d = {d:.4f}  {doc.sentences[i].text}")

ranks = semantic_rank(vectors)
print("\nsemantic ranks (higher = more central to meaning):", ranks)
best = int(np.argmax(ranks))
print("top sentence:", doc.sentences[best].text)

# The provider contract is tiny: `dim` plus `embed_document`. Precomputed
# vectors (e.g. exported from a neural encoder) drop in through the JSON
# Lines reader, ranksum.PrecomputedEmbeddings.from_jsonl(path).
