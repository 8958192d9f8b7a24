"""Per-document orchestration: ranks, fusion, summaries, batch evaluation.

This is the layer the CLI and the tuner share. Nothing here adds algorithmic
behavior; it wires the four extractors, the fusion step, and ROUGE scoring
together and keeps all randomness derived from the run seed.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import RunConfig
from .embedding import HashEmbedder, PrecomputedEmbeddings, semantic_rank
from .errors import DataError
from .keywords import KeywordSet, extract_keywords, keyword_rank
from .ranker import FusionConfig, Summary, fuse_ranks, generate_summary, position_rank
from .rouge import EXTRACTORS, score_all_metrics
from .textproc import Document
from .topicmodel import TopicModel, topic_rank

log = logging.getLogger(__name__)


@dataclass
class RankBundle:
    """The four rank vectors plus reusable per-sentence artifacts."""

    topic: np.ndarray
    keyword: np.ndarray
    embedding: np.ndarray
    position: np.ndarray
    sentence_embeddings: np.ndarray
    keywords: KeywordSet

    def by_name(self, name: str) -> np.ndarray:
        return getattr(self, name)


def make_provider(cfg: RunConfig):
    """Build the embedding provider selected by the config."""
    cfg.embedding.validate()
    if cfg.embedding.provider == "hash":
        return HashEmbedder(dim=cfg.embedding.dim, seed=cfg.seed)
    return PrecomputedEmbeddings.from_jsonl(cfg.embedding.path)


def compute_ranks(
    doc: Document, model: TopicModel, provider, cfg: RunConfig
) -> RankBundle:
    """Run all four extractors on one document."""
    kw = cfg.keyword
    keywords = extract_keywords(
        doc,
        window=kw.window,
        damping=kw.damping,
        epsilon=kw.epsilon,
        max_iterations=kw.max_iterations,
        ratio=kw.ratio,
    )
    embeddings = provider.embed_document(doc)
    return RankBundle(
        topic=topic_rank(model, doc, cfg.lda.fold_in_iterations, cfg.seed),
        keyword=keyword_rank(doc, keywords, kw.count_distinct),
        embedding=semantic_rank(embeddings),
        position=position_rank(len(doc.sentences)),
        sentence_embeddings=embeddings,
        keywords=keywords,
    )


def fused_scores(bundle: RankBundle, fusion: FusionConfig) -> np.ndarray:
    return fuse_ranks(
        bundle.topic, bundle.keyword, bundle.embedding, bundle.position, fusion
    )


def generate_from_scores(
    doc: Document,
    scores: np.ndarray,
    bundle: RankBundle,
    fusion: FusionConfig,
    original_order: bool = False,
) -> Summary:
    return generate_summary(
        doc, scores, bundle.sentence_embeddings, fusion, original_order
    )


def summarize_document(
    doc: Document, model: TopicModel, provider, cfg: RunConfig
) -> tuple[Summary, RankBundle]:
    """Full pipeline for one document: ranks, fusion, novelty, budget."""
    if not doc.sentences:
        raise DataError(f"document {doc.id!r} has no sentences")
    bundle = compute_ranks(doc, model, provider, cfg)
    scores = fused_scores(bundle, cfg.fusion)
    summary = generate_from_scores(
        doc, scores, bundle, cfg.fusion, cfg.original_order
    )
    return summary, bundle


def summary_json(doc: Document, summary: Summary, bundle: RankBundle) -> dict:
    """Explanation payload: selected sentences with their rank components."""
    return {
        "doc_id": summary.doc_id,
        "selected": [
            {
                "index": s.index,
                "score": s.score,
                "rank_components": {
                    "topic": int(bundle.topic[s.index]),
                    "keyword": int(bundle.keyword[s.index]),
                    "embedding": int(bundle.embedding[s.index]),
                    "position": int(bundle.position[s.index]),
                },
            }
            for s in summary.selected
        ],
        "text": summary.text,
    }


def _doc_rows(
    doc: Document,
    refs: tuple[str, ...],
    model: TopicModel,
    provider,
    cfg: RunConfig,
    per_extractor: bool,
) -> list[dict]:
    bundle = compute_ranks(doc, model, provider, cfg)
    systems: list[tuple[str, np.ndarray]] = []
    if per_extractor:
        systems = [
            (name, bundle.by_name(name).astype(float))
            for name in ("topic", "keyword", "embedding", "position")
        ]
    systems.append(("ranksum", fused_scores(bundle, cfg.fusion)))

    rows = []
    for name, scores in systems:
        summary = generate_from_scores(
            doc, scores, bundle, cfg.fusion, cfg.original_order
        )
        metric_scores = score_all_metrics(
            summary.text,
            refs,
            stem_tokens=cfg.rouge.stem,
            word_limit=cfg.rouge.word_limit,
            mode=cfg.rouge.mode,
        )
        rows.append({
            "doc_id": doc.id,
            "extractor": name,
            "rouge1": metric_scores["rouge1"].by_mode(cfg.rouge.mode),
            "rouge2": metric_scores["rouge2"].by_mode(cfg.rouge.mode),
            "rougeL": metric_scores["rougeL"].by_mode(cfg.rouge.mode),
        })
    return rows


def _evaluate_worker(payload) -> list[dict]:
    return _doc_rows(*payload)


def evaluate_corpus(
    corpus,
    model: TopicModel,
    provider,
    cfg: RunConfig,
    per_extractor: bool = False,
    jobs: int = 1,
) -> list[dict]:
    """Score summaries against references for every document with refs.

    Documents lacking references are skipped with a warning; rows come back
    sorted by doc_id then the fixed extractor order, independent of worker
    scheduling.
    """
    tasks = []
    for doc in corpus.documents:
        refs = corpus.refs_for(doc.id)
        if not refs:
            log.warning("evaluate skips document %r: no references", doc.id)
            continue
        if not doc.sentences:
            log.warning("evaluate skips document %r: no sentences", doc.id)
            continue
        tasks.append((doc, refs, model, provider, cfg, per_extractor))
    if not tasks:
        raise DataError("no documents with reference summaries to evaluate")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_doc = list(pool.map(_evaluate_worker, tasks))
    else:
        per_doc = [_doc_rows(*task) for task in tasks]

    rows = [row for doc_rows in per_doc for row in doc_rows]
    order = {name: i for i, name in enumerate(EXTRACTORS)}
    rows.sort(key=lambda r: (r["doc_id"], order[r["extractor"]]))
    return rows
