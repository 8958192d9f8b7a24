"""Corpus ingestion, persistence, and empirical weight/threshold tuning.

Two on-disk layouts are supported. ``dir``: one UTF-8 ``.txt`` per document
under ``docs/``, references under ``refs/<doc_id>.<k>.txt`` with integer k.
``jsonl``: one record ``{"id", "text", "references": [...]}`` per line.
"""

from __future__ import annotations

import json
import logging
import math
import os
from dataclasses import dataclass
from typing import Callable, Sequence

from .config import RunConfig
from .errors import DataError
from .pipeline import compute_ranks, fused_scores, generate_from_scores
from .ranker import FusionConfig
from .rouge import evaluate_multi_ref
from .textproc import Document, parse_document

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]
    references: dict[str, tuple[str, ...]]

    def __len__(self) -> int:
        return len(self.documents)

    def refs_for(self, doc_id: str) -> tuple[str, ...]:
        return self.references.get(doc_id, ())


def _check_unique(doc_ids: Sequence[str]) -> None:
    seen = set()
    for doc_id in doc_ids:
        if doc_id in seen:
            raise DataError(f"duplicate document id {doc_id!r}")
        seen.add(doc_id)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path!r}: {exc}") from exc


def _load_dir(path: str, stopwords) -> Corpus:
    docs_dir = os.path.join(path, "docs")
    if not os.path.isdir(docs_dir):
        raise DataError(f"corpus directory {path!r} has no docs/ subdirectory")
    names = sorted(n for n in os.listdir(docs_dir) if n.endswith(".txt"))
    doc_ids = [os.path.splitext(n)[0] for n in names]
    _check_unique(doc_ids)
    documents = tuple(
        parse_document(doc_id, _read_text(os.path.join(docs_dir, name)), stopwords)
        for doc_id, name in zip(doc_ids, names)
    )

    references: dict[str, tuple[str, ...]] = {}
    refs_dir = os.path.join(path, "refs")
    if os.path.isdir(refs_dir):
        known = set(doc_ids)
        by_doc: dict[str, list[tuple[int, str]]] = {}
        for name in sorted(os.listdir(refs_dir)):
            if not name.endswith(".txt"):
                continue
            stem_part = os.path.splitext(name)[0]
            doc_id, _, k = stem_part.rpartition(".")
            if not doc_id or not k.isdigit():
                raise DataError(
                    f"reference file {name!r} is not named <doc_id>.<k>.txt"
                )
            if doc_id not in known:
                raise DataError(
                    f"reference file {name!r} has no matching document"
                )
            by_doc.setdefault(doc_id, []).append(
                (int(k), _read_text(os.path.join(refs_dir, name)))
            )
        for doc_id, entries in by_doc.items():
            references[doc_id] = tuple(t for _, t in sorted(entries))
    return Corpus(documents=documents, references=references)


def _load_jsonl(path: str, stopwords) -> Corpus:
    documents = []
    references = {}
    ids = []
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    record = json.loads(line)
                    doc_id = record["id"]
                    text = record["text"]
                    refs = record.get("references", [])
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise DataError(
                        f"{path}:{lineno}: malformed corpus record: {exc}"
                    ) from exc
                ids.append(doc_id)
                documents.append(parse_document(doc_id, text, stopwords))
                if refs:
                    references[doc_id] = tuple(refs)
    except OSError as exc:
        raise DataError(f"cannot read corpus file {path!r}: {exc}") from exc
    _check_unique(ids)
    return Corpus(documents=tuple(documents), references=references)


def load_corpus(path: str, layout: str = "dir", stopwords=None) -> Corpus:
    """Read a corpus in the given layout ('dir' or 'jsonl')."""
    if layout == "dir":
        return _load_dir(path, stopwords)
    if layout == "jsonl":
        return _load_jsonl(path, stopwords)
    raise DataError(f"unknown corpus layout {layout!r}")


def write_corpus(corpus: Corpus, path: str, layout: str = "dir") -> None:
    """Write a corpus so that load_corpus reads back equal content."""
    if layout == "dir":
        docs_dir = os.path.join(path, "docs")
        os.makedirs(docs_dir, exist_ok=True)
        for doc in corpus.documents:
            with open(
                os.path.join(docs_dir, f"{doc.id}.txt"), "w", encoding="utf-8"
            ) as fh:
                fh.write(doc.raw)
        if corpus.references:
            refs_dir = os.path.join(path, "refs")
            os.makedirs(refs_dir, exist_ok=True)
            for doc_id, refs in corpus.references.items():
                for k, text in enumerate(refs):
                    with open(
                        os.path.join(refs_dir, f"{doc_id}.{k}.txt"),
                        "w",
                        encoding="utf-8",
                    ) as fh:
                        fh.write(text)
    elif layout == "jsonl":
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for doc in corpus.documents:
                record = {
                    "id": doc.id,
                    "text": doc.raw,
                    "references": list(corpus.refs_for(doc.id)),
                }
                fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    else:
        raise DataError(f"unknown corpus layout {layout!r}")


def weight_grid(grid_step: float) -> list[tuple[float, float, float, float]]:
    """All weight 4-tuples on the unit simplex in grid_step increments."""
    if not 0.0 < grid_step <= 1.0:
        raise DataError(f"grid_step must lie in (0, 1], got {grid_step}")
    m = round(1.0 / grid_step)
    if abs(m * grid_step - 1.0) > 1e-9:
        raise DataError(f"grid_step must evenly divide 1, got {grid_step}")
    grid = []
    for i in range(m + 1):
        for j in range(m - i + 1):
            for k in range(m - i - j + 1):
                l = m - i - j - k
                grid.append((i / m, j / m, k / m, l / m))
    return grid


def _mean_objective(
    per_doc: list[tuple],  # (doc, refs, bundle)
    fusion: FusionConfig,
    cfg: RunConfig,
    objective: str,
) -> float:
    total = 0.0
    for doc, refs, bundle in per_doc:
        scores = fused_scores(bundle, fusion)
        summary = generate_from_scores(doc, scores, bundle, fusion)
        best = evaluate_multi_ref(
            summary.text,
            refs,
            metric=objective,
            stem_tokens=cfg.rouge.stem,
            word_limit=cfg.rouge.word_limit,
            mode=cfg.rouge.mode,
        )
        total += best.by_mode(cfg.rouge.mode)
    return total / len(per_doc)


def _rank_once(
    validation: Corpus, model, provider, cfg: RunConfig
) -> list[tuple]:
    per_doc = []
    for doc in validation.documents:
        refs = validation.refs_for(doc.id)
        if not refs:
            log.warning("tuning skips document %r: no references", doc.id)
            continue
        if not doc.sentences:
            log.warning("tuning skips document %r: no sentences", doc.id)
            continue
        per_doc.append((doc, refs, compute_ranks(doc, model, provider, cfg)))
    if not per_doc:
        raise DataError("no documents with reference summaries to tune on")
    return per_doc


def tune_weights(
    validation: Corpus,
    model,
    provider,
    cfg: RunConfig,
    grid_step: float = 0.05,
    objective: str = "rouge1",
    progress: Callable[[int, int], None] | None = None,
) -> FusionConfig:
    """Exhaustive simplex grid search for the fusion weights.

    Per-document rank vectors are computed once and reused across the grid.
    Returns the base fusion config with the best weights substituted; ties
    go to the lexicographically smallest tuple.
    """
    per_doc = _rank_once(validation, model, provider, cfg)
    grid = weight_grid(grid_step)
    best_weights = None
    best_value = -math.inf
    for i, weights in enumerate(sorted(grid)):
        fusion = cfg.fusion.with_weights(weights)
        if sum(weights) <= 0:
            continue
        value = _mean_objective(per_doc, fusion, cfg, objective)
        if value > best_value:
            best_value = value
            best_weights = weights
        if progress is not None:
            progress(i + 1, len(grid))
    log.info(
        "tuned weights %s with mean %s (%s) = %.4f",
        best_weights, objective, cfg.rouge.mode, best_value,
    )
    return cfg.fusion.with_weights(best_weights)


def tune_thresholds(
    validation: Corpus,
    model,
    provider,
    cfg: RunConfig,
    t1_values: Sequence[float] = tuple(x / 20 for x in range(10, 20)),
    t2_values: Sequence[int] = tuple(range(1, 7)),
    objective: str = "rouge1",
) -> FusionConfig:
    """Second-stage 2-D grid over the novelty thresholds (t1, t2)."""
    per_doc = _rank_once(validation, model, provider, cfg)
    best = None
    best_value = -math.inf
    for t1 in sorted(t1_values):
        for t2 in sorted(t2_values):
            fusion = FusionConfig(
                **{**cfg.fusion.__dict__, "t1": float(t1), "t2": int(t2)}
            )
            value = _mean_objective(per_doc, fusion, cfg, objective)
            if value > best_value:
                best_value = value
                best = fusion
    log.info(
        "tuned thresholds t1=%s t2=%s with mean %s = %.4f",
        best.t1, best.t2, objective, best_value,
    )
    return best
