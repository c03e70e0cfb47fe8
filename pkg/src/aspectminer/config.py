"""Pipeline configuration: one JSON file, every field defaulted."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from .common import AspectMinerError


@dataclass
class PipelineConfig:
    max_iterations: int = 10
    min_frequency: int = 2
    example_cap: int = 20
    rerank_threshold: float = 0.5
    rerank_hidden_size: int = 100
    rerank_epochs: int = 200
    rerank_learning_rate: float = 0.01
    rerank_batch_size: int = 32
    seed: int = 0
    expected_dim: int | None = None
    domain_label: str = ""
    # optional file overrides; None means the bundled default
    rules_path: str | None = None
    stopwords_path: str | None = None
    negations_path: str | None = None
    positive_seeds_path: str | None = None
    negative_seeds_path: str | None = None
    seed_lexicon_path: str | None = None
    rerank_training_path: str | None = None
    rerank_model_path: str | None = None

    @classmethod
    def from_file(cls, path: str) -> "PipelineConfig":
        with open(path, encoding="utf-8") as f:
            try:
                raw = json.load(f)
            except json.JSONDecodeError as exc:
                raise AspectMinerError(f"{path}: not valid JSON ({exc})") from None
        if not isinstance(raw, dict):
            raise AspectMinerError(f"{path}: config must be a JSON object")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(raw) - known)
        if unknown:
            raise AspectMinerError(f"{path}: unknown config keys {unknown}")
        return cls(**raw)
