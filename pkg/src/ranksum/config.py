"""Run configuration: every knob in one place, mirrored by a config file.

The file format is plain ``key = value`` lines grouped under bracketed
sections, UTF-8, ``#`` comments allowed. Values are typed by a fixed schema
(ints, floats, booleans as true/false, strings, ``none`` for unset) and
round-trip losslessly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DataError
from .ranker import FusionConfig


@dataclass
class LdaConfig:
    num_topics: int = 512
    alpha: float | None = None  # None -> 50 / num_topics at training time
    beta: float = 0.01
    iterations: int = 500
    fold_in_iterations: int = 50
    min_doc_freq: int = 2

    def validate(self) -> None:
        if self.num_topics < 2:
            raise DataError(f"num_topics must be >= 2, got {self.num_topics}")
        if self.alpha is not None and self.alpha <= 0:
            raise DataError(f"alpha must be positive, got {self.alpha}")
        if self.beta <= 0:
            raise DataError(f"beta must be positive, got {self.beta}")
        if self.iterations < 1:
            raise DataError(f"iterations must be >= 1, got {self.iterations}")
        if self.fold_in_iterations < 1:
            raise DataError(
                f"fold_in_iterations must be >= 1, got {self.fold_in_iterations}"
            )
        if self.min_doc_freq < 1:
            raise DataError(f"min_doc_freq must be >= 1, got {self.min_doc_freq}")


@dataclass
class KeywordConfig:
    window: int = 4
    damping: float = 0.85
    epsilon: float = 1e-6
    max_iterations: int = 100
    ratio: float = 0.2
    count_distinct: bool = False

    def validate(self) -> None:
        if self.window < 2:
            raise DataError(f"window must be >= 2, got {self.window}")
        if not 0.0 < self.damping < 1.0:
            raise DataError(f"damping must lie in (0, 1), got {self.damping}")
        if self.epsilon <= 0:
            raise DataError(f"epsilon must be positive, got {self.epsilon}")
        if self.max_iterations < 1:
            raise DataError(
                f"max_iterations must be >= 1, got {self.max_iterations}"
            )
        if not 0.0 < self.ratio <= 1.0:
            raise DataError(f"ratio must lie in (0, 1], got {self.ratio}")


@dataclass
class EmbeddingConfig:
    provider: str = "hash"  # "hash" or "file"
    path: str | None = None
    dim: int = 64

    def validate(self) -> None:
        if self.provider not in ("hash", "file"):
            raise DataError(
                f"embedding provider must be 'hash' or 'file', got "
                f"{self.provider!r}"
            )
        if self.provider == "file" and not self.path:
            raise DataError("embedding provider 'file' needs an embeddings path")
        if self.dim < 2:
            raise DataError(f"embedding dim must be >= 2, got {self.dim}")


@dataclass
class RougeConfig:
    stem: bool = True
    mode: str = "f1"  # "recall" or "f1"
    word_limit: int | None = None

    def validate(self) -> None:
        if self.mode not in ("recall", "f1"):
            raise DataError(f"report mode must be 'recall' or 'f1', got {self.mode!r}")
        if self.word_limit is not None and self.word_limit < 1:
            raise DataError(f"word_limit must be >= 1, got {self.word_limit}")


@dataclass
class RunConfig:
    """Aggregate of all tunables for a run, plus the master seed."""

    fusion: FusionConfig = field(default_factory=FusionConfig)
    lda: LdaConfig = field(default_factory=LdaConfig)
    keyword: KeywordConfig = field(default_factory=KeywordConfig)
    embedding: EmbeddingConfig = field(default_factory=EmbeddingConfig)
    rouge: RougeConfig = field(default_factory=RougeConfig)
    seed: int = 0
    stopwords_path: str | None = None
    original_order: bool = False

    def validate(self) -> None:
        self.fusion.validate()
        self.lda.validate()
        self.keyword.validate()
        self.embedding.validate()
        self.rouge.validate()


# section -> (attribute on RunConfig or "" for top level, key -> type tag)
_SCHEMA: dict[str, tuple[str, dict[str, str]]] = {
    "run": ("", {
        "seed": "int",
        "stopwords_path": "opt_str",
        "original_order": "bool",
    }),
    "fusion": ("fusion", {
        "alpha": "float",
        "beta": "float",
        "gamma": "float",
        "delta": "float",
        "t1": "float",
        "t2": "int",
        "sentence_budget": "opt_int",
        "word_budget": "opt_int",
        "novelty_enabled": "bool",
        "novelty_conjunction": "bool",
    }),
    "lda": ("lda", {
        "num_topics": "int",
        "alpha": "opt_float",
        "beta": "float",
        "iterations": "int",
        "fold_in_iterations": "int",
        "min_doc_freq": "int",
    }),
    "keyword": ("keyword", {
        "window": "int",
        "damping": "float",
        "epsilon": "float",
        "max_iterations": "int",
        "ratio": "float",
        "count_distinct": "bool",
    }),
    "embedding": ("embedding", {
        "provider": "str",
        "path": "opt_str",
        "dim": "int",
    }),
    "rouge": ("rouge", {
        "stem": "bool",
        "mode": "str",
        "word_limit": "opt_int",
    }),
}


def _format_value(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_value(raw: str, tag: str, where: str):
    raw = raw.strip()
    optional = tag.startswith("opt_")
    if optional:
        if raw == "none":
            return None
        tag = tag[4:]
    try:
        if tag == "int":
            return int(raw)
        if tag == "float":
            return float(raw)
        if tag == "bool":
            if raw in ("true", "false"):
                return raw == "true"
            raise ValueError(f"expected true/false, got {raw!r}")
        if tag == "str":
            return raw
    except ValueError as exc:
        raise DataError(f"{where}: bad value: {exc}") from exc
    raise DataError(f"{where}: unknown schema tag {tag!r}")


def config_to_text(cfg: RunConfig) -> str:
    lines = []
    for section, (attr, keys) in _SCHEMA.items():
        target = cfg if attr == "" else getattr(cfg, attr)
        lines.append(f"[{section}]")
        for key in keys:
            lines.append(f"{key} = {_format_value(getattr(target, key))}")
        lines.append("")
    return "\n".join(lines)


def config_from_text(text: str, where: str = "<config>") -> RunConfig:
    cfg = RunConfig()
    section = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        location = f"{where}:{lineno}"
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SCHEMA:
                raise DataError(f"{location}: unknown section [{section}]")
            continue
        if "=" not in line:
            raise DataError(f"{location}: expected 'key = value'")
        if section is None:
            raise DataError(f"{location}: key outside any [section]")
        key, _, raw = line.partition("=")
        key = key.strip()
        attr, keys = _SCHEMA[section]
        if key not in keys:
            raise DataError(f"{location}: unknown key {key!r} in [{section}]")
        value = _parse_value(raw, keys[key], location)
        target = cfg if attr == "" else getattr(cfg, attr)
        setattr(target, key, value)
    return cfg


def save_config(cfg: RunConfig, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(config_to_text(cfg))


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DataError(f"cannot read config file {path!r}: {exc}") from exc
    return config_from_text(text, where=path)
