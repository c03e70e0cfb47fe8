"""Span-level evaluation against gold aspect annotations.

Matching modes: exact requires identical character spans; lenient credits any
character overlap ("service" inside "waiting service" counts). Matching is
greedy left to right and each gold span pairs with at most one prediction.
"""

from __future__ import annotations

import random
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .common import AspectMinerError, Polarity
from .conllu import ParsedCorpus

EXACT = "exact"
LENIENT = "lenient"

# gold polarity values admitted to polarity scoring
SCORED_POLARITIES = {"positive": Polarity.POSITIVE, "negative": Polarity.NEGATIVE}


@dataclass(frozen=True)
class GoldSpan:
    start: int
    end: int
    polarity: str  # positive | negative | conflict | neutral

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"gold span must satisfy start < end, got ({self.start}, {self.end})")


@dataclass(frozen=True)
class GoldAnnotation:
    sentence_id: str
    aspect_spans: tuple[GoldSpan, ...]


@dataclass
class EvalResult:
    precision: float
    recall: float
    f1: float
    tp: int
    fp: int
    fn: int
    mode: str

    @classmethod
    def from_counts(cls, tp: int, fp: int, fn: int, mode: str) -> "EvalResult":
        precision = tp / (tp + fp) if tp + fp > 0 else 0.0
        recall = tp / (tp + fn) if tp + fn > 0 else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        return cls(precision=precision, recall=recall, f1=f1, tp=tp, fp=fp, fn=fn, mode=mode)


def _spans_match(pred: tuple[int, int], gold: GoldSpan, mode: str) -> bool:
    if mode == EXACT:
        return pred == (gold.start, gold.end)
    return max(pred[0], gold.start) < min(pred[1], gold.end)


def eval_extraction(predicted_spans: dict[str, list[tuple[int, int]]],
                    gold: list[GoldAnnotation], mode: str) -> EvalResult:
    """Score predicted aspect spans against the gold annotations."""
    if mode not in (EXACT, LENIENT):
        raise ValueError(f"unknown mode {mode!r}")
    by_id = {g.sentence_id: g for g in gold}
    unknown = [sid for sid in predicted_spans if sid not in by_id]
    if unknown:
        raise ValueError(f"predictions reference unknown sentence ids: {sorted(unknown)}")

    tp = fp = fn = 0
    for g in gold:
        preds = sorted(predicted_spans.get(g.sentence_id, []))
        matched = [False] * len(g.aspect_spans)
        order = sorted(range(len(g.aspect_spans)), key=lambda i: (g.aspect_spans[i].start,
                                                                  g.aspect_spans[i].end))
        for pred in preds:
            hit = None
            for i in order:
                if not matched[i] and _spans_match(pred, g.aspect_spans[i], mode):
                    hit = i
                    break
            if hit is None:
                fp += 1
            else:
                matched[hit] = True
                tp += 1
        fn += matched.count(False)
    return EvalResult.from_counts(tp, fp, fn, mode)


def eval_polarity(predictions: dict[str, list[tuple[tuple[int, int], Polarity]]],
                  gold: list[GoldAnnotation], mode: str = LENIENT) -> EvalResult:
    """Score (span, polarity) predictions; gold conflict/neutral spans are excluded.

    A prediction is a true positive when its span matches an unmatched gold
    span and the polarity agrees; a span match with the wrong polarity is a
    false positive and leaves the gold span unmatched.
    """
    if mode not in (EXACT, LENIENT):
        raise ValueError(f"unknown mode {mode!r}")
    by_id = {g.sentence_id: g for g in gold}
    unknown = [sid for sid in predictions if sid not in by_id]
    if unknown:
        raise ValueError(f"predictions reference unknown sentence ids: {sorted(unknown)}")

    tp = fp = fn = 0
    for g in gold:
        scored = [s for s in g.aspect_spans if s.polarity in SCORED_POLARITIES]
        preds = sorted(predictions.get(g.sentence_id, []), key=lambda p: p[0])
        matched = [False] * len(scored)
        for span, polarity in preds:
            hit = None
            for i, gold_span in enumerate(scored):
                if matched[i]:
                    continue
                if _spans_match(span, gold_span, mode) and \
                        SCORED_POLARITIES[gold_span.polarity] is polarity:
                    hit = i
                    break
            if hit is None:
                fp += 1
            else:
                matched[hit] = True
                tp += 1
        fn += matched.count(False)
    return EvalResult.from_counts(tp, fp, fn, mode)


def split_train_test(corpus: ParsedCorpus, fraction: float,
                     seed: int) -> tuple[ParsedCorpus, ParsedCorpus]:
    """Deterministic random split; both sides keep the original sentence order."""
    if not 0 < fraction < 1:
        raise ValueError("fraction must be strictly between 0 and 1")
    n = len(corpus.sentences)
    indices = list(range(n))
    random.Random(seed).shuffle(indices)
    k = round(fraction * n)
    train_idx = sorted(indices[:k])
    test_idx = sorted(indices[k:])
    train = ParsedCorpus(sentences=tuple(corpus.sentences[i] for i in train_idx),
                         source_path=f"{corpus.source_path}#train")
    test = ParsedCorpus(sentences=tuple(corpus.sentences[i] for i in test_idx),
                        source_path=f"{corpus.source_path}#test")
    return train, test


@dataclass(frozen=True)
class GoldSentence:
    sentence_id: str
    text: str
    spans: tuple[GoldSpan, ...]


def load_semeval_xml(path: str) -> list[GoldSentence]:
    """Read aspect-term annotations from the SemEval ABSA XML format.

    Expected elements: sentence[@id] > text, aspectTerms > aspectTerm with
    term, polarity, from and to attributes.
    """
    try:
        tree = ET.parse(path)
    except ET.ParseError as exc:
        raise AspectMinerError(f"{path}: not valid XML ({exc})") from None
    out: list[GoldSentence] = []
    for idx, sent in enumerate(tree.getroot().iter("sentence")):
        sid = sent.get("id") or str(idx)
        text_el = sent.find("text")
        text = text_el.text or "" if text_el is not None else ""
        spans: list[GoldSpan] = []
        terms_el = sent.find("aspectTerms")
        if terms_el is not None:
            for term_el in terms_el.iter("aspectTerm"):
                try:
                    start = int(term_el.get("from", ""))
                    end = int(term_el.get("to", ""))
                except ValueError:
                    raise AspectMinerError(
                        f"{path}: aspectTerm in sentence {sid} has bad from/to") from None
                if start < 0 or end > len(text) or start >= end:
                    raise AspectMinerError(
                        f"{path}: aspectTerm span ({start}, {end}) outside sentence {sid}")
                spans.append(GoldSpan(start=start, end=end,
                                      polarity=term_el.get("polarity", "neutral")))
        out.append(GoldSentence(sentence_id=sid, text=text, spans=tuple(spans)))
    if not out:
        raise AspectMinerError(f"{path}: no sentences found")
    return out


def gold_annotations(sentences: list[GoldSentence]) -> list[GoldAnnotation]:
    return [GoldAnnotation(sentence_id=s.sentence_id, aspect_spans=s.spans)
            for s in sentences]
