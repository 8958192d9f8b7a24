"""ROUGE-1/2/L scoring with stemming, truncation, and multi-reference picks.

Candidate and reference texts are lowercased, tokenized, and (by default)
stemmed with the package-wide stemmer. An optional word limit truncates the
candidate only, at whitespace granularity, before tokenization; references
are never truncated. With several references the best score per metric is
reported.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DataError
from .porter import stem
from .textproc import ngrams, tokenize

METRICS = ("rouge1", "rouge2", "rougeL")
EXTRACTORS = ("topic", "keyword", "embedding", "position", "ranksum")


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f1: float

    @classmethod
    def from_counts(
        cls, matches: int, ref_count: int, cand_count: int
    ) -> "RougeScore":
        recall = matches / ref_count if ref_count else 0.0
        precision = matches / cand_count if cand_count else 0.0
        denom = precision + recall
        f1 = 2.0 * precision * recall / denom if denom > 0 else 0.0
        return cls(recall=recall, precision=precision, f1=f1)

    def by_mode(self, mode: str) -> float:
        if mode == "recall":
            return self.recall
        if mode == "f1":
            return self.f1
        raise DataError(f"unknown report mode {mode!r}")


def _prepare(
    text: str, stem_tokens: bool, word_limit: int | None = None
) -> list[str]:
    if word_limit is not None:
        text = " ".join(text.split()[:word_limit])
    tokens = tokenize(text)
    if stem_tokens:
        tokens = [stem(t) for t in tokens]
    return tokens


def rouge_n(
    candidate: str,
    reference: str,
    n: int,
    stem_tokens: bool = True,
    word_limit: int | None = None,
) -> RougeScore:
    """Clipped n-gram overlap: matches never exceed the reference counts."""
    if n < 1:
        raise DataError(f"n must be >= 1, got {n}")
    cand = ngrams(_prepare(candidate, stem_tokens, word_limit), n)
    ref = ngrams(_prepare(reference, stem_tokens), n)
    matches = sum((cand & ref).values())
    return RougeScore.from_counts(matches, sum(ref.values()), sum(cand.values()))


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0] * (len(b) + 1)
        for j, y in enumerate(b, start=1):
            if x == y:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def rouge_l(
    candidate: str,
    reference: str,
    stem_tokens: bool = True,
    word_limit: int | None = None,
) -> RougeScore:
    """Longest common subsequence overlap between token sequences."""
    cand = _prepare(candidate, stem_tokens, word_limit)
    ref = _prepare(reference, stem_tokens)
    lcs = _lcs_length(cand, ref)
    return RougeScore.from_counts(lcs, len(ref), len(cand))


def score_metric(
    metric: str,
    candidate: str,
    reference: str,
    stem_tokens: bool = True,
    word_limit: int | None = None,
) -> RougeScore:
    if metric == "rouge1":
        return rouge_n(candidate, reference, 1, stem_tokens, word_limit)
    if metric == "rouge2":
        return rouge_n(candidate, reference, 2, stem_tokens, word_limit)
    if metric == "rougeL":
        return rouge_l(candidate, reference, stem_tokens, word_limit)
    raise DataError(f"unknown metric {metric!r}")


def evaluate_multi_ref(
    candidate: str,
    references: Sequence[str],
    metric: str = "rouge1",
    stem_tokens: bool = True,
    word_limit: int | None = None,
    mode: str = "f1",
) -> RougeScore:
    """Score against each reference independently and keep the best.

    "Best" is judged by the report mode's headline number (F1 by default,
    recall for limited-length evaluation); the first reference wins ties.
    """
    if not references:
        raise DataError("no reference summaries")
    best = None
    for reference in references:
        score = score_metric(metric, candidate, reference, stem_tokens, word_limit)
        if best is None or score.by_mode(mode) > best.by_mode(mode):
            best = score
    return best


def score_all_metrics(
    candidate: str,
    references: Sequence[str],
    stem_tokens: bool = True,
    word_limit: int | None = None,
    mode: str = "f1",
) -> dict[str, RougeScore]:
    """Best-of-references score for each of the three metrics."""
    return {
        metric: evaluate_multi_ref(
            candidate, references, metric, stem_tokens, word_limit, mode
        )
        for metric in METRICS
    }


def write_report_csv(rows: Iterable[dict], path: str) -> None:
    """Write evaluation rows as doc_id, extractor, rouge1, rouge2, rougeL."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["doc_id", "extractor", "rouge1", "rouge2", "rougeL"])
        for row in rows:
            writer.writerow([
                row["doc_id"],
                row["extractor"],
                f"{row['rouge1']:.6f}",
                f"{row['rouge2']:.6f}",
                f"{row['rougeL']:.6f}",
            ])


def plot_report(rows: Sequence[dict], path: str) -> None:
    """Render per-document metric lines, one panel per metric, as SVG."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    doc_ids = sorted({row["doc_id"] for row in rows})
    extractors = [
        e for e in EXTRACTORS if any(r["extractor"] == e for r in rows)
    ]
    positions = range(len(doc_ids))
    fig, axes = plt.subplots(
        len(METRICS), 1, figsize=(max(6.0, 0.45 * len(doc_ids) + 2.0), 9.0),
        sharex=True,
    )
    for ax, metric in zip(axes, METRICS):
        for extractor in extractors:
            by_doc = {
                r["doc_id"]: r[metric]
                for r in rows
                if r["extractor"] == extractor
            }
            ax.plot(
                positions,
                [by_doc.get(d, 0.0) for d in doc_ids],
                marker="o",
                markersize=3,
                linewidth=1.0,
                label=extractor,
            )
        ax.set_ylabel(metric)
        ax.set_ylim(0.0, 1.0)
        ax.grid(True, alpha=0.3)
    axes[0].legend(loc="upper right", fontsize="small", ncol=2)
    axes[-1].set_xticks(list(positions))
    axes[-1].set_xticklabels(doc_ids, rotation=90, fontsize="x-small")
    axes[-1].set_xlabel("document")
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
