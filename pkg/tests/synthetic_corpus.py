"""Synthetic corpus generators shared by unit and acceptance tests."""

from __future__ import annotations

import numpy as np

from ranksum import Corpus, Document, parse_document

TOPIC_A = [f"aurora{i}" for i in range(10)]
TOPIC_B = [f"basalt{i}" for i in range(10)]


def two_topic_documents(
    n_docs: int = 40, tokens_per_doc: int = 50, seed: int = 42
) -> tuple[list[Document], list[int]]:
    """Docs drawn from two disjoint 10-word vocabularies; labels 0/1."""
    rng = np.random.default_rng(seed)
    docs, labels = [], []
    for d in range(n_docs):
        label = 0 if d < n_docs // 2 else 1
        vocab = TOPIC_A if label == 0 else TOPIC_B
        words = rng.choice(vocab, size=tokens_per_doc)
        sentences = [
            " ".join(words[i : i + 5]) + "."
            for i in range(0, tokens_per_doc, 5)
        ]
        docs.append(parse_document(f"doc{d:03d}", " ".join(sentences)))
        labels.append(label)
    return docs, labels


_WORD_POOL = [
    "harbor", "signal", "meadow", "copper", "lantern", "voyage", "timber",
    "canyon", "ember", "falcon", "granite", "hollow", "ivory", "juniper",
    "kestrel", "ledger", "marble", "nectar", "orchard", "pebble", "quarry",
    "russet", "saddle", "thicket", "umber", "velvet", "willow", "yonder",
    "zephyr", "anchor", "bramble", "cinder", "drift", "estuary", "fjord",
    "gully", "heather", "inlet", "jetty", "knoll", "lagoon", "moss",
    "nook", "osprey", "prairie", "reef", "shale", "tundra", "vale", "wharf",
]


def random_documents(
    n_docs: int, max_sentences: int = 50, seed: int = 0
) -> list[Document]:
    """Random word-salad documents over a fixed 50-word pool."""
    rng = np.random.default_rng(seed)
    docs = []
    for d in range(n_docs):
        n_sentences = int(rng.integers(1, max_sentences + 1))
        sentences = []
        for _ in range(n_sentences):
            length = int(rng.integers(3, 9))
            words = rng.choice(_WORD_POOL, size=length)
            sentences.append(" ".join(words) + ".")
        docs.append(parse_document(f"rand{d:04d}", " ".join(sentences)))
    return docs


_PLANT_TOPICS = {
    0: ["market", "trade", "price", "stock", "profit", "economy", "growth",
        "bank", "export", "revenue"],
    1: ["storm", "rain", "flood", "wind", "cloud", "forecast", "coast",
        "river", "thunder", "damage"],
}
_ENTITY_POOL = [
    "acheron", "borealis", "cascadia", "deimos", "elbrus", "fennec",
    "galatea", "hyperion", "ionia", "jasper", "kodiak", "lumen", "mistral",
    "nimbus", "oberon", "pallas", "quasar", "rigel", "sirius", "talos",
]
_FILLER = [
    "committee", "meeting", "report", "statement", "member", "official",
    "question", "answer", "session", "agenda", "minute", "record", "notice",
    "draft", "review", "schedule", "update", "survey", "briefing", "memo",
    "panel", "summary", "motion", "item",
]


def planted_gold_corpus(n_docs: int = 20, seed: int = 42) -> Corpus:
    """Documents with planted gold summaries mixing lead, topical, and
    keyword-dense sentences.

    Each gold sentence is strongest in exactly one feature: the lead opens
    the document, the topical sentence mirrors the document's blend of topic
    and filler vocabulary, and the keyword sentence concentrates the
    document's recurring entity terms. Golds also carry one unique word each
    so no extractor ranks them near the bottom, while a quarter of the
    filler sentences get unique words of their own to keep the embedding
    signal partial.
    """
    rng = np.random.default_rng(seed)
    documents = []
    references = {}
    uniq = 0

    def unique_word() -> str:
        nonlocal uniq
        uniq += 1
        return f"uniq{seed}x{uniq}"

    for d in range(n_docs):
        topic = _PLANT_TOPICS[d % 2]
        entities = list(rng.choice(_ENTITY_POOL, size=3, replace=False))

        def topic_word() -> str:
            return str(rng.choice(topic))

        def filler_word() -> str:
            return str(rng.choice(_FILLER))

        lead = (
            f"The {topic_word()} {filler_word()} opened with {topic_word()} "
            f"{filler_word()} beside {unique_word()}."
        )
        topical = (
            f"Observers said {topic_word()} {filler_word()} and "
            f"{topic_word()} pushed {filler_word()} past {filler_word()} "
            f"levels near {unique_word()}."
        )
        keyword_dense = (
            f"Reports from {entities[0]} and {entities[1]} tied "
            f"{entities[2]} to {entities[0]} {topic_word()} {filler_word()} "
            f"plans at {unique_word()}."
        )
        fillers = []
        for i in range(9):
            words = [filler_word() for _ in range(5)]
            if rng.random() < 0.4:
                words.insert(int(rng.integers(0, 4)), topic_word())
            if i in (1, 5):
                words.insert(int(rng.integers(0, 4)), entities[i % 3])
            if rng.random() < 0.25:
                words.insert(int(rng.integers(0, len(words))), unique_word())
            fillers.append(" ".join(words).capitalize() + ".")
        sentences = [lead] + fillers[:2] + [topical] + fillers[2:5] + \
            [keyword_dense] + fillers[5:]
        doc = parse_document(f"plant{d:02d}", " ".join(sentences))
        documents.append(doc)
        references[doc.id] = (" ".join([lead, topical, keyword_dense]),)
    return Corpus(documents=tuple(documents), references=references)
