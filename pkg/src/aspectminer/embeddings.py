"""Word-vector store over the GloVe text format with cosine-similarity queries."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .common import EmbeddingFormatError


@dataclass(frozen=True)
class SimilarityStats:
    mean: float
    std: float   # population standard deviation
    max: float
    min: float


def _cosine(v1: np.ndarray, v2: np.ndarray) -> float | None:
    n1 = float(np.linalg.norm(v1))
    n2 = float(np.linalg.norm(v2))
    if n1 == 0.0 or n2 == 0.0:
        return None
    return float(np.dot(v1, v2) / (n1 * n2))


class EmbeddingStore:
    """Immutable word -> vector map; words are stored lowercase."""

    def __init__(self, vectors: dict[str, np.ndarray], dim: int):
        if dim <= 0:
            raise ValueError("embedding dimension must be positive")
        self._vectors = vectors
        self.dim = dim

    @property
    def vocab_size(self) -> int:
        return len(self._vectors)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._vectors

    def get(self, word: str) -> np.ndarray | None:
        return self._vectors.get(word.lower())

    def vector(self, term: str) -> np.ndarray | None:
        """Vector for a term; multiword terms average their in-vocabulary words.

        Returns None when no component word is in the vocabulary.
        """
        words = term.lower().split()
        if len(words) == 1:
            return self._vectors.get(words[0])
        found = [self._vectors[w] for w in words if w in self._vectors]
        if not found:
            return None
        return np.mean(found, axis=0)

    def cosine(self, w1: str, w2: str) -> float | None:
        """Cosine similarity in [-1, 1]; None when either term is unresolvable."""
        v1 = self.vector(w1)
        v2 = self.vector(w2)
        if v1 is None or v2 is None:
            return None
        return _cosine(v1, v2)

    def similarity_stats(self, candidate: str, reference_set: list[str]) -> SimilarityStats | None:
        """Cosine statistics between a candidate and every in-vocabulary reference.

        None when the candidate is out of vocabulary or no reference resolves.
        Raises ValueError on an empty reference set.
        """
        if not reference_set:
            raise ValueError("reference_set must be non-empty")
        cand = self.vector(candidate)
        if cand is None:
            return None
        sims = []
        for ref in reference_set:
            vec = self.vector(ref)
            if vec is None:
                continue
            sim = _cosine(cand, vec)
            if sim is not None:
                sims.append(sim)
        if not sims:
            return None
        arr = np.asarray(sims, dtype=float)
        return SimilarityStats(mean=float(arr.mean()), std=float(arr.std()),
                               max=float(arr.max()), min=float(arr.min()))


def load_glove(path: str, expected_dim: int | None = None) -> EmbeddingStore:
    """Load a GloVe-format text file: one ``word v1 .. vd`` entry per line.

    The dimensionality is fixed by the first entry; rows that disagree raise
    EmbeddingFormatError with the offending line number. Duplicate words keep
    their first occurrence.
    """
    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            parts = raw.split()
            if not parts:
                continue
            word = parts[0].lower()
            if len(parts) < 2:
                raise EmbeddingFormatError("entry has no vector components", line_no)
            try:
                vec = np.array([float(x) for x in parts[1:]], dtype=float)
            except ValueError:
                raise EmbeddingFormatError("non-numeric vector component", line_no) from None
            if dim is None:
                dim = len(vec)
                if expected_dim is not None and dim != expected_dim:
                    raise EmbeddingFormatError(
                        f"dimension {dim} does not match expected {expected_dim}", line_no)
            elif len(vec) != dim:
                raise EmbeddingFormatError(
                    f"row has {len(vec)} components, expected {dim}", line_no)
            if word not in vectors:
                vectors[word] = vec
    if dim is None:
        raise EmbeddingFormatError("embedding file contains no entries", 0)
    return EmbeddingStore(vectors, dim)
