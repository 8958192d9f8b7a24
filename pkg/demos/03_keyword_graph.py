"""Keyword extraction: co-occurrence graph, PageRank, sentence ranking."""

from ranksum import (
    build_cooccurrence_graph,
    extract_keywords,
    keyword_rank,
    pagerank,
    parse_document,
)

doc = parse_document("article", (
    "The harbor authority expanded the container terminal this spring. "
    "Container traffic through the harbor doubled after the terminal opened. "
    "Residents walked their dogs along the beach. "
    "A new crane loads container stacks at the terminal in minutes. "
    "The harbor master praised the terminal crews."
))

graph = build_cooccurrence_graph(doc, window=4)
print(f"graph: {len(graph.nodes)} nodes, {graph.edge_count} edges")
print("sample edge weights:")
for a, b in [("harbor", "termin"), ("contain", "termin"), ("dog", "beach")]:
    print(f"  {a} -- {b}: {graph.edge_weight(a, b)}")

scores = pagerank(graph, damping=0.85, epsilon=1e-6, max_iterations=100)
top = sorted(scores.items(), key=lambda kv: -kv[1])[:6]
print("\ntop PageRank scores (stemmed forms):")
for word, score in top:
    print(f"  {word:10s} {score:.4f}")

keywords = extract_keywords(doc, ratio=0.2)
print("\nkeyword set:", keywords.words)

ranks = keyword_rank(doc, keywords)
print("\nsentence keyword ranks (higher = more keywords):")
for sentence, rank in zip(doc.sentences, ranks):
    print(f"  rank {rank}: {sentence.text}")
