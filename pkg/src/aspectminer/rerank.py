"""Candidate-opinion scoring: a single-hidden-layer MLP over embedding features.

The feature vector for a candidate term is its word embedding concatenated
with the mean, population standard deviation, maximum and minimum cosine
similarity between the candidate and a reference set of generic opinion
terms. The network (rectifier hidden layer, logistic output) is trained once
with binary cross-entropy and mini-batch gradient descent; scores read as the
probability that the candidate is an opinion term.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from .bootstrap import CandidateTerm
from .common import LexiconFormatError
from .embeddings import EmbeddingStore


@dataclass(frozen=True)
class RerankFeatures:
    embedding: np.ndarray
    sim_mean: float
    sim_std: float
    sim_max: float
    sim_min: float

    def vector(self) -> np.ndarray:
        return np.concatenate([self.embedding,
                               [self.sim_mean, self.sim_std, self.sim_max, self.sim_min]])


@dataclass
class MlpModel:
    w1: np.ndarray  # (hidden_size, input_dim)
    b1: np.ndarray  # (hidden_size,)
    w2: np.ndarray  # (hidden_size,)
    b2: float

    @property
    def hidden_size(self) -> int:
        return self.w1.shape[0]

    @property
    def input_dim(self) -> int:
        return self.w1.shape[1]


@dataclass(frozen=True)
class ScoredOpinion:
    term: str
    score: float
    features: RerankFeatures


def featurize(candidate: str, store: EmbeddingStore,
              generic_opinions: list[str]) -> RerankFeatures | None:
    """Features for one candidate, or None when it is out of vocabulary."""
    if not generic_opinions:
        raise ValueError("generic_opinions must be non-empty")
    vec = store.vector(candidate)
    if vec is None:
        return None
    stats = store.similarity_stats(candidate, generic_opinions)
    if stats is None:
        return None
    return RerankFeatures(embedding=vec, sim_mean=stats.mean, sim_std=stats.std,
                          sim_max=stats.max, sim_min=stats.min)


def _sigmoid(z: np.ndarray | float) -> np.ndarray | float:
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))),
                    np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))


def _forward(model: MlpModel, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hidden activations and output logits for a batch (n, input_dim)."""
    z1 = x @ model.w1.T + model.b1
    h = np.maximum(z1, 0.0)
    z2 = h @ model.w2 + model.b2
    return h, z2


def predict(model: MlpModel, features: RerankFeatures) -> float:
    """Probability in (0, 1) that the candidate is an opinion term."""
    x = features.vector()
    if x.shape[0] != model.input_dim:
        raise ValueError(f"feature length {x.shape[0]} does not match model "
                         f"input dim {model.input_dim}")
    _, z2 = _forward(model, x[None, :])
    return float(_sigmoid(z2[0]))


def loss_and_gradients(model: MlpModel, x: np.ndarray,
                       y: np.ndarray) -> tuple[float, dict[str, np.ndarray]]:
    """Mean binary cross-entropy and its gradients for a batch.

    Uses the numerically stable form logaddexp(0, z) - y*z.
    """
    n = x.shape[0]
    z1 = x @ model.w1.T + model.b1
    h = np.maximum(z1, 0.0)
    z2 = h @ model.w2 + model.b2
    loss = float(np.mean(np.logaddexp(0.0, z2) - y * z2))

    dz2 = (_sigmoid(z2) - y) / n             # (n,)
    dw2 = h.T @ dz2                          # (hidden,)
    db2 = float(np.sum(dz2))
    dh = np.outer(dz2, model.w2)             # (n, hidden)
    dz1 = dh * (z1 > 0)
    dw1 = dz1.T @ x                          # (hidden, input_dim)
    db1 = dz1.sum(axis=0)
    return loss, {"w1": dw1, "b1": db1, "w2": dw2, "b2": np.array(db2)}


def train(dataset: list[tuple[RerankFeatures, int]], hidden_size: int = 100,
          epochs: int = 200, learning_rate: float = 0.01,
          batch_size: int = 32, seed: int = 0) -> MlpModel:
    """Train the classifier; deterministic for a fixed seed.

    Raises ValueError unless both classes are present and the hyperparameters
    are positive.
    """
    if hidden_size < 1 or epochs < 1 or batch_size < 1 or learning_rate <= 0:
        raise ValueError("hyperparameters must be positive")
    labels = {label for _, label in dataset}
    if labels != {0, 1}:
        raise ValueError("training data must contain both classes")

    x = np.stack([f.vector() for f, _ in dataset])
    y = np.array([label for _, label in dataset], dtype=float)
    n, input_dim = x.shape

    rng = np.random.default_rng(seed)
    model = MlpModel(
        w1=rng.normal(0.0, 1.0 / np.sqrt(input_dim), size=(hidden_size, input_dim)),
        b1=np.zeros(hidden_size),
        w2=rng.normal(0.0, 1.0 / np.sqrt(hidden_size), size=hidden_size),
        b2=0.0,
    )
    for _ in range(epochs):
        order = rng.permutation(n)
        for start in range(0, n, batch_size):
            batch = order[start:start + batch_size]
            _, grads = loss_and_gradients(model, x[batch], y[batch])
            model.w1 -= learning_rate * grads["w1"]
            model.b1 -= learning_rate * grads["b1"]
            model.w2 -= learning_rate * grads["w2"]
            model.b2 -= learning_rate * float(grads["b2"])
    return model


def filter_opinions(candidates: list[CandidateTerm], model: MlpModel,
                    store: EmbeddingStore, generic_opinions: list[str],
                    threshold: float = 0.5) -> list[ScoredOpinion]:
    """Score candidates and keep those strictly above the threshold.

    Out-of-vocabulary candidates are dropped. Output is sorted by descending
    score, ties broken by term.
    """
    scored: list[ScoredOpinion] = []
    for cand in candidates:
        features = featurize(cand.term, store, generic_opinions)
        if features is None:
            continue
        score = predict(model, features)
        if score > threshold:
            scored.append(ScoredOpinion(term=cand.term, score=score, features=features))
    scored.sort(key=lambda s: (-s.score, s.term))
    return scored


def save_model(model: MlpModel, path: str) -> None:
    """Write the model as human-diffable decimal text.

    Header line is ``input_dim hidden_size``; then W1 row-major (one row per
    hidden unit), b1, W2 and b2, one line each group.
    """
    def fmt(values) -> str:
        return " ".join(f"{v:.17g}" for v in np.atleast_1d(values))

    lines = [f"{model.input_dim} {model.hidden_size}"]
    lines.extend(fmt(row) for row in model.w1)
    lines.append(fmt(model.b1))
    lines.append(fmt(model.w2))
    lines.append(fmt(model.b2))
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")


def load_model(path: str) -> MlpModel:
    with open(path, encoding="utf-8") as f:
        lines = [line.strip() for line in f if line.strip()]
    try:
        input_dim, hidden_size = (int(v) for v in lines[0].split())
        rows = [np.array([float(v) for v in line.split()]) for line in lines[1:]]
        w1 = np.stack(rows[:hidden_size])
        b1, w2 = rows[hidden_size], rows[hidden_size + 1]
        b2 = float(rows[hidden_size + 2][0])
    except (ValueError, IndexError) as exc:
        raise LexiconFormatError(f"{path}: malformed model file ({exc})") from None
    if w1.shape != (hidden_size, input_dim) or b1.shape != (hidden_size,) or \
            w2.shape != (hidden_size,):
        raise LexiconFormatError(f"{path}: model shapes are inconsistent")
    return MlpModel(w1=w1, b1=b1, w2=w2, b2=b2)


def load_training_csv(path: str, store: EmbeddingStore,
                      generic_opinions: list[str]) -> tuple[list[tuple[RerankFeatures, int]], list[str]]:
    """Read a ``term,label`` CSV and featurize; returns (dataset, skipped terms)."""
    dataset: list[tuple[RerankFeatures, int]] = []
    skipped: list[str] = []
    with open(path, encoding="utf-8", newline="") as f:
        for line_no, row in enumerate(csv.reader(f), start=1):
            if not row or not row[0].strip():
                continue
            if line_no == 1 and row[0].strip().lower() == "term":
                continue
            if len(row) < 2 or row[1].strip() not in ("0", "1"):
                raise LexiconFormatError(f"{path}:{line_no}: expected term,label with label 0 or 1")
            term = row[0].strip().lower()
            features = featurize(term, store, generic_opinions)
            if features is None:
                skipped.append(term)
                continue
            dataset.append((features, int(row[1].strip())))
    return dataset, skipped
