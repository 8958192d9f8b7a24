"""Corpus IO, config round-trip, and weight tuning tests."""

import numpy as np
import pytest

from ranksum import (
    Corpus,
    DataError,
    FusionConfig,
    RunConfig,
    load_corpus,
    parse_document,
    train_lda,
    tune_weights,
    weight_grid,
    write_corpus,
    HashEmbedder,
)
from ranksum.config import config_from_text, config_to_text


def _corpus_equal(a: Corpus, b: Corpus) -> bool:
    return (
        [d.id for d in a.documents] == [d.id for d in b.documents]
        and [d.raw for d in a.documents] == [d.raw for d in b.documents]
        and a.references == b.references
    )


class TestCorpusIO:
    def _sample(self):
        docs = (
            parse_document("alpha", "First text here. More of it."),
            parse_document("beta", "Second text there. Extra words."),
        )
        refs = {"alpha": ("Gold one.", "Gold two."), "beta": ("Gold three.",)}
        return Corpus(documents=docs, references=refs)

    def test_dir_round_trip(self, tmp_path):
        corpus = self._sample()
        write_corpus(corpus, str(tmp_path), layout="dir")
        loaded = load_corpus(str(tmp_path), layout="dir")
        assert _corpus_equal(corpus, loaded)

    def test_jsonl_round_trip(self, tmp_path):
        corpus = self._sample()
        path = tmp_path / "corpus.jsonl"
        write_corpus(corpus, str(path), layout="jsonl")
        loaded = load_corpus(str(path), layout="jsonl")
        assert _corpus_equal(corpus, loaded)

    def test_dir_without_refs(self, tmp_path):
        (tmp_path / "docs").mkdir()
        (tmp_path / "docs" / "a.txt").write_text("One. Two.", encoding="utf-8")
        (tmp_path / "docs" / "b.txt").write_text("Three.", encoding="utf-8")
        corpus = load_corpus(str(tmp_path), layout="dir")
        assert len(corpus) == 2
        assert corpus.references == {}

    def test_jsonl_with_references(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(
            '{"id": "x", "text": "Body here.", "references": ["r1", "r2"]}\n',
            encoding="utf-8",
        )
        corpus = load_corpus(str(path), layout="jsonl")
        assert len(corpus) == 1
        assert corpus.refs_for("x") == ("r1", "r2")

    def test_duplicate_id_rejected(self, tmp_path):
        path = tmp_path / "c.jsonl"
        path.write_text(
            '{"id": "x", "text": "a."}\n{"id": "x", "text": "b."}\n',
            encoding="utf-8",
        )
        with pytest.raises(DataError, match="duplicate document id"):
            load_corpus(str(path), layout="jsonl")

    def test_reference_without_document(self, tmp_path):
        (tmp_path / "docs").mkdir()
        (tmp_path / "refs").mkdir()
        (tmp_path / "docs" / "a.txt").write_text("One.", encoding="utf-8")
        (tmp_path / "refs" / "ghost.0.txt").write_text("Gold.", encoding="utf-8")
        with pytest.raises(DataError, match="no matching document"):
            load_corpus(str(tmp_path), layout="dir")

    def test_missing_docs_dir(self, tmp_path):
        with pytest.raises(DataError, match="docs/"):
            load_corpus(str(tmp_path), layout="dir")

    def test_badly_named_reference(self, tmp_path):
        (tmp_path / "docs").mkdir()
        (tmp_path / "refs").mkdir()
        (tmp_path / "docs" / "a.txt").write_text("One.", encoding="utf-8")
        (tmp_path / "refs" / "a.first.txt").write_text("Gold.", encoding="utf-8")
        with pytest.raises(DataError, match="<doc_id>.<k>.txt"):
            load_corpus(str(tmp_path), layout="dir")

    def test_unknown_layout(self, tmp_path):
        with pytest.raises(DataError):
            load_corpus(str(tmp_path), layout="xml")


class TestConfigRoundTrip:
    def test_default_round_trip(self):
        cfg = RunConfig()
        assert config_from_text(config_to_text(cfg)) == cfg

    def test_modified_round_trip(self):
        cfg = RunConfig()
        cfg.seed = 99
        cfg.stopwords_path = "custom/stop.txt"
        cfg.original_order = True
        cfg.fusion = FusionConfig(
            alpha=0.25, beta=0.5, gamma=0.125, delta=0.125,
            t1=0.65, t2=5, sentence_budget=None, word_budget=120,
            novelty_enabled=False, novelty_conjunction=True,
        )
        cfg.lda.num_topics = 16
        cfg.lda.alpha = 0.07
        cfg.lda.iterations = 123
        cfg.keyword.window = 6
        cfg.keyword.count_distinct = True
        cfg.embedding.provider = "file"
        cfg.embedding.path = "emb.jsonl"
        cfg.rouge.mode = "recall"
        cfg.rouge.word_limit = 100
        text = config_to_text(cfg)
        assert config_from_text(text) == cfg

    def test_unknown_key_rejected(self):
        with pytest.raises(DataError, match="unknown key"):
            config_from_text("[run]\nbogus = 1\n")

    def test_unknown_section_rejected(self):
        with pytest.raises(DataError, match="unknown section"):
            config_from_text("[nope]\n")

    def test_comments_and_blanks_ignored(self):
        cfg = config_from_text("# top comment\n\n[run]\nseed = 5\n")
        assert cfg.seed == 5

    def test_bad_value_reported_with_location(self):
        with pytest.raises(DataError, match=":2"):
            config_from_text("[run]\nseed = pony\n")


class TestRunConfigValidation:
    def test_defaults_valid(self):
        RunConfig().validate()

    def test_bad_lda_topics(self):
        cfg = RunConfig()
        cfg.lda.num_topics = 1
        with pytest.raises(DataError):
            cfg.validate()

    def test_bad_keyword_damping(self):
        cfg = RunConfig()
        cfg.keyword.damping = 1.0
        with pytest.raises(DataError):
            cfg.validate()

    def test_file_provider_needs_path(self):
        cfg = RunConfig()
        cfg.embedding.provider = "file"
        with pytest.raises(DataError):
            cfg.validate()

    def test_bad_rouge_mode(self):
        cfg = RunConfig()
        cfg.rouge.mode = "precision"
        with pytest.raises(DataError):
            cfg.validate()


class TestWeightGrid:
    def test_step_one_gives_vertices(self):
        grid = weight_grid(1.0)
        assert len(grid) == 4
        assert set(grid) == {
            (1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0),
            (0.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, 1.0),
        }

    def test_step_half_gives_ten(self):
        grid = weight_grid(0.5)
        assert len(grid) == 10
        for weights in grid:
            assert sum(weights) == pytest.approx(1.0, abs=1e-12)

    def test_step_quarter_count(self):
        # compositions of 4 into 4 parts: C(7, 3) = 35
        assert len(weight_grid(0.25)) == 35

    def test_bad_steps(self):
        with pytest.raises(DataError):
            weight_grid(0.0)
        with pytest.raises(DataError):
            weight_grid(0.3)


@pytest.fixture(scope="module")
def lead_setup():
    # gold summaries are exactly the two leading sentences; all other
    # signal is word salad, so the position feature should dominate
    rng = np.random.default_rng(77)
    pool = [f"word{i}" for i in range(30)]
    documents = []
    references = {}
    for d in range(4):
        sentences = [
            " ".join(rng.choice(pool, size=6)) + "." for _ in range(6)
        ]
        doc = parse_document(f"lead{d}", " ".join(sentences))
        documents.append(doc)
        references[doc.id] = (" ".join(sentences[:2]),)
    corpus = Corpus(documents=tuple(documents), references=references)
    model = train_lda(
        corpus.documents, num_topics=2, alpha=0.1, beta=0.01,
        iterations=30, seed=1,
    )
    cfg = RunConfig()
    cfg.fusion.sentence_budget = 2
    cfg.lda.fold_in_iterations = 10
    provider = HashEmbedder(dim=16, seed=0)
    return corpus, model, provider, cfg


class TestTuneWeights:
    def test_lead_fixture_prefers_position(self, lead_setup):
        corpus, model, provider, cfg = lead_setup
        fusion = tune_weights(
            corpus, model, provider, cfg, grid_step=0.25, objective="rouge1"
        )
        assert fusion.weights == (0.0, 0.0, 0.0, 1.0)

    def test_returned_tuple_is_grid_optimal(self, lead_setup):
        corpus, model, provider, cfg = lead_setup
        from ranksum.corpus import _mean_objective, _rank_once

        per_doc = _rank_once(corpus, model, provider, cfg)
        best = tune_weights(corpus, model, provider, cfg, grid_step=0.5)
        best_value = _mean_objective(per_doc, best, cfg, "rouge1")
        for weights in weight_grid(0.5):
            value = _mean_objective(
                per_doc, cfg.fusion.with_weights(weights), cfg, "rouge1"
            )
            assert best_value >= value - 1e-12

    def test_empty_validation_rejected(self):
        cfg = RunConfig()
        corpus = Corpus(documents=(), references={})
        with pytest.raises(DataError):
            tune_weights(corpus, None, None, cfg)

    def test_no_references_rejected(self):
        cfg = RunConfig()
        corpus = Corpus(
            documents=(parse_document("a", "Text here."),), references={}
        )
        with pytest.raises(DataError):
            tune_weights(corpus, None, None, cfg)
