"""Binary polarity assignment for opinion terms.

A term is positive when its average cosine similarity to a generic positive
word set exceeds the average similarity to a generic negative set; the signed
difference is the confidence score. Terms already present in the seed opinion
lexicon keep their seed polarity.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .bootstrap import SeedLexicon, load_wordlist
from .common import Polarity
from .embeddings import EmbeddingStore, _cosine
from .rerank import ScoredOpinion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolaritySeedSets:
    positive: tuple[str, ...]
    negative: tuple[str, ...]

    def __post_init__(self):
        if not self.positive or not self.negative:
            raise ValueError("both polarity seed sets must be non-empty")
        overlap = set(self.positive) & set(self.negative)
        if overlap:
            raise ValueError(f"polarity seed sets overlap: {sorted(overlap)}")

    def swapped(self) -> "PolaritySeedSets":
        return PolaritySeedSets(positive=self.negative, negative=self.positive)


@dataclass(frozen=True)
class PolarizedOpinion:
    term: str
    polarity: Polarity
    score: float        # sim_pos - sim_neg, signed confidence
    rerank_score: float


def load_polarity_seeds(positive_path: str, negative_path: str) -> PolaritySeedSets:
    return PolaritySeedSets(positive=tuple(sorted(load_wordlist(positive_path))),
                            negative=tuple(sorted(load_wordlist(negative_path))))


def _mean_similarity(vec: np.ndarray, words: tuple[str, ...],
                     store: EmbeddingStore) -> float | None:
    sims = []
    for w in words:
        ref = store.vector(w)
        if ref is None:
            continue
        sim = _cosine(vec, ref)
        if sim is not None:
            sims.append(sim)
    if not sims:
        return None
    return float(np.mean(sims))


def estimate_polarity(term: str, store: EmbeddingStore,
                      seeds: PolaritySeedSets) -> tuple[Polarity, float] | None:
    """(polarity, signed score) for a term, or None when it cannot be embedded.

    Score is the mean cosine to the positive set minus the mean cosine to the
    negative set; an exact zero resolves to negative with a warning.
    """
    vec = store.vector(term)
    if vec is None:
        return None
    sim_pos = _mean_similarity(vec, seeds.positive, store)
    sim_neg = _mean_similarity(vec, seeds.negative, store)
    if sim_pos is None or sim_neg is None:
        return None
    score = sim_pos - sim_neg
    if score > 0:
        return (Polarity.POSITIVE, score)
    if score == 0:
        logger.warning("polarity tie for %r; defaulting to negative", term)
    return (Polarity.NEGATIVE, score)


def polarize_lexicon(opinions: list[ScoredOpinion], seed_lexicon: SeedLexicon,
                     store: EmbeddingStore,
                     seeds: PolaritySeedSets) -> list[PolarizedOpinion]:
    """Assign polarity to every filtered opinion term.

    Seed-lexicon membership overrides embedding estimation (score +/-1 by
    convention); terms that are neither seeded nor embeddable are dropped with
    a warning.
    """
    out: list[PolarizedOpinion] = []
    for op in opinions:
        seeded = seed_lexicon.polarity(op.term)
        if seeded is not None:
            score = 1.0 if seeded is Polarity.POSITIVE else -1.0
            out.append(PolarizedOpinion(term=op.term, polarity=seeded, score=score,
                                        rerank_score=op.score))
            continue
        estimated = estimate_polarity(op.term, store, seeds)
        if estimated is None:
            logger.warning("dropping opinion term %r: polarity cannot be estimated", op.term)
            continue
        polarity, score = estimated
        out.append(PolarizedOpinion(term=op.term, polarity=polarity, score=score,
                                    rerank_score=op.score))
    return out
