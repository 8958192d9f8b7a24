"""Unsupervised extractive summarization by weighted rank fusion.

Each sentence of a document is ranked by four independent extractors
(topic closeness, leave-one-out embedding centrality, keyword density,
position), the rank vectors are fused with fixed weights, and sentences
are admitted to the summary greedily under a novelty filter and a budget.
"""

__version__ = "0.1.0"

from .config import (
    EmbeddingConfig,
    KeywordConfig,
    LdaConfig,
    RougeConfig,
    RunConfig,
    load_config,
    save_config,
)
from .corpus import (
    Corpus,
    load_corpus,
    tune_thresholds,
    tune_weights,
    weight_grid,
    write_corpus,
)
from .embedding import (
    HashEmbedder,
    PrecomputedEmbeddings,
    document_embedding,
    semantic_rank,
)
from .errors import DataError, InvariantError, RanksumError
from .keywords import (
    KeywordSet,
    WordGraph,
    build_cooccurrence_graph,
    extract_keywords,
    keyword_rank,
    pagerank,
)
from .pipeline import (
    RankBundle,
    compute_ranks,
    evaluate_corpus,
    fused_scores,
    make_provider,
    summarize_document,
    summary_json,
)
from .ranker import (
    FusionConfig,
    Summary,
    cosine_similarity,
    fuse_ranks,
    generate_summary,
    ngram_overlap_count,
    novelty_check,
    position_rank,
    rank_by_score,
)
from .rouge import (
    RougeScore,
    evaluate_multi_ref,
    rouge_l,
    rouge_n,
    score_all_metrics,
)
from .textproc import (
    Document,
    Sentence,
    load_stopwords,
    ngrams,
    parse_document,
    preprocess,
    split_sentences,
    tokenize,
)
from .topicmodel import (
    TopicModel,
    build_vocabulary,
    infer_doc_topic,
    load_model,
    rank_by_closeness,
    save_model,
    sentence_topic_vector,
    topic_rank,
    train_lda,
    word_topic_matrix,
)
from .porter import stem

__all__ = [
    "Corpus", "DataError", "Document", "EmbeddingConfig", "FusionConfig",
    "HashEmbedder", "InvariantError", "KeywordConfig", "KeywordSet",
    "LdaConfig", "PrecomputedEmbeddings", "RankBundle", "RanksumError",
    "RougeConfig", "RougeScore", "RunConfig", "Sentence", "Summary",
    "TopicModel", "WordGraph", "build_cooccurrence_graph", "build_vocabulary",
    "compute_ranks", "cosine_similarity", "document_embedding",
    "evaluate_corpus", "evaluate_multi_ref", "extract_keywords",
    "fuse_ranks", "fused_scores", "generate_summary", "infer_doc_topic",
    "keyword_rank", "load_config", "load_corpus", "load_model",
    "load_stopwords", "make_provider", "ngram_overlap_count", "ngrams",
    "novelty_check", "pagerank", "parse_document", "position_rank",
    "preprocess", "rank_by_closeness", "rank_by_score", "rouge_l", "rouge_n",
    "save_config",
    "save_model", "score_all_metrics", "semantic_rank",
    "sentence_topic_vector", "split_sentences", "stem", "summarize_document",
    "summary_json", "tokenize", "topic_rank", "train_lda", "tune_thresholds",
    "tune_weights", "weight_grid", "word_topic_matrix", "write_corpus",
]
