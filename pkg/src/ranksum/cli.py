"""Batch command line: train-lda, summarize, evaluate, tune.

A thin layer over the library: flags are merged onto a RunConfig (defaults,
then the config file named by --config or $RANKSUM_CONFIG, then explicit
flags), validated, and dispatched. Machine output goes to stdout or the
named output files only; logs go to stderr. Exit codes: 0 success, 1 usage
error, 2 data error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import __version__
from .config import RunConfig, load_config, save_config
from .corpus import Corpus, load_corpus, tune_thresholds, tune_weights
from .errors import DataError, InvariantError
from .pipeline import evaluate_corpus, make_provider, summarize_document, summary_json
from .rouge import plot_report, write_report_csv
from .textproc import load_stopwords, parse_document
from .topicmodel import load_model, save_model, train_lda

log = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _weights(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            f"expected four comma-separated weights, got {text!r}"
        )
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="config file (default: $RANKSUM_CONFIG)")
    p.add_argument("--stopwords", help="stopword file overriding the built-in list")
    p.add_argument("--seed", type=int, default=None, help="master RNG seed")
    p.add_argument(
        "-v", "--verbose", action="count", default=0,
        help="log more to stderr (repeat for debug)",
    )


def _add_corpus_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=required)
    group.add_argument("--corpus", help="corpus directory (docs/ and refs/)")
    group.add_argument("--jsonl", help="corpus as JSON Lines records")


def _add_embedder(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--embedder", choices=("hash", "file"), default=None,
        help="sentence embedding provider",
    )
    p.add_argument("--embeddings", help="precomputed embeddings (JSON Lines)")
    p.add_argument(
        "--embed-dim", type=int, default=None,
        help="dimensionality of the hash embedder",
    )


def _build_parser() -> _Parser:
    parser = _Parser(prog="ranksum", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("train-lda", help="train a topic model on a corpus")
    _add_corpus_source(p)
    p.add_argument("--topics", type=int, default=None, help="number of topics")
    p.add_argument("--alpha", type=float, default=None, help="doc-topic prior")
    p.add_argument("--beta", type=float, default=None, help="topic-word prior")
    p.add_argument("--iters", type=int, default=None, help="Gibbs sweeps")
    p.add_argument(
        "--min-doc-freq", type=int, default=None,
        help="vocabulary document-frequency cutoff",
    )
    p.add_argument("--out", required=True, help="model file to write")
    _add_common(p)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("summarize", help="summarize a single document")
    p.add_argument("--model", required=True, help="trained model file")
    _add_embedder(p)
    p.add_argument("--doc", required=True, help="UTF-8 text file to summarize")
    budget = p.add_mutually_exclusive_group()
    budget.add_argument(
        "--sentences", type=int, default=None, help="summary budget in sentences"
    )
    budget.add_argument(
        "--words", type=int, default=None, help="summary budget in words"
    )
    p.add_argument(
        "--weights", type=_weights, default=None, metavar="a,b,c,d",
        help="fusion weights for topic,keyword,embedding,position",
    )
    p.add_argument("--t1", type=float, default=None, help="novelty similarity threshold")
    p.add_argument("--t2", type=int, default=None, help="novelty shared n-gram threshold")
    p.add_argument(
        "--no-novelty", action="store_true", default=None,
        help="disable the novelty filter",
    )
    p.add_argument(
        "--novelty-conjunction", action="store_true", default=None,
        help="require both novelty clauses instead of either",
    )
    p.add_argument(
        "--original-order", action="store_true", default=None,
        help="render selected sentences in document order",
    )
    p.add_argument(
        "--json", action="store_true",
        help="emit the JSON explanation payload instead of plain text",
    )
    p.add_argument(
        "--keywords-dump", metavar="FILE",
        help="also write the extracted keywords as TSV word<TAB>score",
    )
    p.add_argument(
        "--fold-in-iters", type=int, default=None,
        help="Gibbs sweeps when folding the document into the topic model",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_summarize)

    p = sub.add_parser("evaluate", help="score summaries against references")
    _add_corpus_source(p)
    p.add_argument("--model", required=True, help="trained model file")
    _add_embedder(p)
    p.add_argument(
        "--mode", choices=("recall", "f1"), default=None,
        help="headline ROUGE number",
    )
    p.add_argument(
        "--limit", type=int, default=None,
        help="truncate candidates to this many words before scoring",
    )
    p.add_argument("--report", required=True, help="CSV report to write")
    p.add_argument("--plot", help="also write an SVG chart per metric")
    p.add_argument(
        "--per-extractor", action="store_true",
        help="report each extractor alone alongside the fused system",
    )
    budget = p.add_mutually_exclusive_group()
    budget.add_argument("--sentences", type=int, default=None)
    budget.add_argument("--words", type=int, default=None)
    p.add_argument(
        "--jobs", type=int, default=1, help="parallel workers across documents"
    )
    _add_common(p)
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("tune", help="grid-search fusion weights on a validation set")
    _add_corpus_source(p)
    p.add_argument("--model", required=True, help="trained model file")
    _add_embedder(p)
    p.add_argument(
        "--grid-step", type=float, default=0.05,
        help="weight grid increment (must divide 1)",
    )
    p.add_argument(
        "--objective", choices=("rouge1", "rouge2", "rougeL"), default="rouge1",
        help="metric whose mean is maximized",
    )
    p.add_argument(
        "--tune-thresholds", action="store_true",
        help="also grid-search the novelty thresholds after the weights",
    )
    p.add_argument("--out", required=True, help="config file to write")
    _add_common(p)
    p.set_defaults(func=_cmd_tune)

    return parser


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )


def _run_config(args) -> RunConfig:
    path = args.config or os.environ.get("RANKSUM_CONFIG")
    cfg = load_config(path) if path else RunConfig()

    if args.seed is not None:
        cfg.seed = args.seed
    if args.stopwords is not None:
        cfg.stopwords_path = args.stopwords

    if getattr(args, "embedder", None) is not None:
        cfg.embedding.provider = args.embedder
    if getattr(args, "embeddings", None) is not None:
        cfg.embedding.path = args.embeddings
    if getattr(args, "embed_dim", None) is not None:
        cfg.embedding.dim = args.embed_dim

    if getattr(args, "topics", None) is not None:
        cfg.lda.num_topics = args.topics
    if getattr(args, "alpha", None) is not None:
        cfg.lda.alpha = args.alpha
    if getattr(args, "beta", None) is not None:
        cfg.lda.beta = args.beta
    if getattr(args, "iters", None) is not None:
        cfg.lda.iterations = args.iters
    if getattr(args, "min_doc_freq", None) is not None:
        cfg.lda.min_doc_freq = args.min_doc_freq
    if getattr(args, "fold_in_iters", None) is not None:
        cfg.lda.fold_in_iterations = args.fold_in_iters

    if getattr(args, "sentences", None) is not None:
        cfg.fusion.sentence_budget = args.sentences
        cfg.fusion.word_budget = None
    if getattr(args, "words", None) is not None:
        cfg.fusion.word_budget = args.words
        cfg.fusion.sentence_budget = None
    if getattr(args, "weights", None) is not None:
        cfg.fusion = cfg.fusion.with_weights(args.weights)
    if getattr(args, "t1", None) is not None:
        cfg.fusion.t1 = args.t1
    if getattr(args, "t2", None) is not None:
        cfg.fusion.t2 = args.t2
    if getattr(args, "no_novelty", None):
        cfg.fusion.novelty_enabled = False
    if getattr(args, "novelty_conjunction", None):
        cfg.fusion.novelty_conjunction = True
    if getattr(args, "original_order", None):
        cfg.original_order = True

    if getattr(args, "mode", None) is not None:
        cfg.rouge.mode = args.mode
    if getattr(args, "limit", None) is not None:
        cfg.rouge.word_limit = args.limit

    cfg.validate()
    return cfg


def _load_any_corpus(args, cfg: RunConfig) -> Corpus:
    stopwords = load_stopwords(cfg.stopwords_path)
    if args.corpus:
        return load_corpus(args.corpus, layout="dir", stopwords=stopwords)
    return load_corpus(args.jsonl, layout="jsonl", stopwords=stopwords)


def _cmd_train(args) -> int:
    cfg = _run_config(args)
    corpus = _load_any_corpus(args, cfg)
    log.info("training on %d documents", len(corpus))
    model = train_lda(
        corpus.documents,
        num_topics=cfg.lda.num_topics,
        alpha=cfg.lda.alpha,
        beta=cfg.lda.beta,
        iterations=cfg.lda.iterations,
        seed=cfg.seed,
        min_doc_freq=cfg.lda.min_doc_freq,
    )
    save_model(model, args.out)
    log.info("wrote %s (%d topics, %d words)", args.out, model.num_topics,
             model.vocab_size)
    return 0


def _cmd_summarize(args) -> int:
    cfg = _run_config(args)
    model = load_model(args.model)
    provider = make_provider(cfg)
    stopwords = load_stopwords(cfg.stopwords_path)
    doc_id = os.path.splitext(os.path.basename(args.doc))[0]
    try:
        with open(args.doc, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read document {args.doc!r}: {exc}") from exc
    doc = parse_document(doc_id, raw, stopwords)

    summary, bundle = summarize_document(doc, model, provider, cfg)
    if args.keywords_dump:
        with open(args.keywords_dump, "w", encoding="utf-8", newline="\n") as fh:
            for word, score in zip(bundle.keywords.words, bundle.keywords.scores):
                fh.write(f"{word}\t{score:.6f}\n")
    if args.json:
        print(json.dumps(summary_json(doc, summary, bundle), ensure_ascii=False))
    else:
        print(summary.text)
    return 0


def _cmd_evaluate(args) -> int:
    cfg = _run_config(args)
    model = load_model(args.model)
    provider = make_provider(cfg)
    corpus = _load_any_corpus(args, cfg)
    rows = evaluate_corpus(
        corpus, model, provider, cfg,
        per_extractor=args.per_extractor, jobs=args.jobs,
    )
    write_report_csv(rows, args.report)
    log.info("wrote %s (%d rows)", args.report, len(rows))
    if args.plot:
        plot_report(rows, args.plot)
        log.info("wrote %s", args.plot)
    return 0


def _cmd_tune(args) -> int:
    cfg = _run_config(args)
    model = load_model(args.model)
    provider = make_provider(cfg)
    corpus = _load_any_corpus(args, cfg)
    fusion = tune_weights(
        corpus, model, provider, cfg,
        grid_step=args.grid_step, objective=args.objective,
    )
    cfg.fusion = fusion
    if args.tune_thresholds:
        cfg.fusion = tune_thresholds(
            corpus, model, provider, cfg, objective=args.objective
        )
    save_config(cfg, args.out)
    log.info("wrote %s", args.out)
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    _setup_logging(args.verbose)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"ranksum: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"ranksum: internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
