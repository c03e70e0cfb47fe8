"""Locations of the bundled default data files (all user-replaceable)."""

from __future__ import annotations

from importlib import resources


def _data_path(name: str) -> str:
    return str(resources.files("aspectminer").joinpath("data", name))


def default_stopwords_path() -> str:
    return _data_path("stopwords.txt")


def default_negations_path() -> str:
    return _data_path("negations.txt")


def default_positive_seeds_path() -> str:
    return _data_path("positive_seeds.txt")


def default_negative_seeds_path() -> str:
    return _data_path("negative_seeds.txt")


def default_seed_lexicon_path() -> str:
    return _data_path("seed_opinions.csv")


def default_rerank_training_path() -> str:
    return _data_path("rerank_training.csv")
