"""Sentiment-mention detection over a parsed corpus with curated lexicons.

An aspect occurrence and an opinion occurrence form a mention when the
undirected dependency path between the opinion token and the aspect span's
head token has length 1 (direct) or 2 (second-order); relation labels are
ignored. The mention takes the opinion term's lexicon polarity, reversed
exactly once when any negation word stands in a direct dependency relation
with the opinion token.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .bootstrap import load_wordlist
from .common import Polarity
from .conllu import ParsedCorpus, ParsedSentence, SentenceRef, TokenSpan, lemma_or_surface
from .lexicons import Lexicons

MAX_PAIR_DISTANCE = 2


@dataclass(frozen=True)
class NegationLexicon:
    terms: frozenset[str]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("negation lexicon must be non-empty")


def load_negations(path: str) -> NegationLexicon:
    return NegationLexicon(frozenset(load_wordlist(path)))


@dataclass
class SentimentMention:
    aspect_term: str            # canonical term, alias-resolved
    aspect_span: TokenSpan
    opinion_term: str
    opinion_span: int           # single token index
    polarity: Polarity
    negated: bool
    sentence_ref: SentenceRef
    sentence_text: str
    # char offsets for highlighting; internal, not part of the JSONL record
    aspect_char_span: tuple[int, int] | None = field(default=None, compare=False)
    opinion_char_span: tuple[int, int] | None = field(default=None, compare=False)


def mention_record(m: SentimentMention) -> dict:
    """The wire form of a mention: exactly the public fields."""
    return {
        "aspect_term": m.aspect_term,
        "aspect_span": list(m.aspect_span),
        "opinion_term": m.opinion_term,
        "opinion_span": m.opinion_span,
        "polarity": m.polarity.value,
        "negated": m.negated,
        "sentence_ref": [m.sentence_ref[0], m.sentence_ref[1]],
        "sentence_text": m.sentence_text,
    }


def write_mentions_jsonl(mentions: list[SentimentMention], path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for m in mentions:
            f.write(json.dumps(mention_record(m), ensure_ascii=False, sort_keys=True) + "\n")


def find_aspect_occurrences(sentence: ParsedSentence,
                            lex: Lexicons) -> list[tuple[TokenSpan, str]]:
    """Non-overlapping aspect occurrences, longest span first.

    Matches enabled entries on normalized tokens, by canonical term or any
    alias; each occurrence reports the canonical term.
    """
    norms = [lemma_or_surface(t) for t in sentence.tokens]
    candidates: list[tuple[TokenSpan, str]] = []
    for entry in lex.aspects:
        if not entry.enabled:
            continue
        for name in [entry.term] + list(entry.aliases):
            words = name.split()
            n = len(words)
            if n == 0:
                continue
            for start in range(0, len(norms) - n + 1):
                if norms[start:start + n] == words:
                    candidates.append(((start + 1, start + n), entry.term))
    candidates.sort(key=lambda c: (-(c[0][1] - c[0][0]), c[0][0], c[1]))
    chosen: list[tuple[TokenSpan, str]] = []
    covered: set[int] = set()
    for span, term in candidates:
        indices = set(range(span[0], span[1] + 1))
        if indices & covered:
            continue
        covered |= indices
        chosen.append((span, term))
    chosen.sort(key=lambda c: c[0])
    return chosen


def _span_head(sentence: ParsedSentence, span: TokenSpan) -> int:
    """The span token whose head lies outside the span (the syntactic anchor)."""
    indices = set(range(span[0], span[1] + 1))
    for i in sorted(indices, reverse=True):
        head = sentence.token(i).head
        if head == 0 or head not in indices:
            return i
    return span[1]


def find_mentions(sentence: ParsedSentence, lex: Lexicons,
                  negations: NegationLexicon,
                  sentence_ref: SentenceRef = ("", 0)) -> list[SentimentMention]:
    """All sentiment mentions in one sentence, ordered by (aspect span, opinion token)."""
    aspects = find_aspect_occurrences(sentence, lex)
    if not aspects:
        return []
    opinion_entries = {o.term: o for o in lex.opinions if o.enabled}
    norms = [lemma_or_surface(t) for t in sentence.tokens]
    opinions = [(i + 1, opinion_entries[norm]) for i, norm in enumerate(norms)
                if norm in opinion_entries]
    if not opinions:
        return []

    adjacency = sentence.adjacency()
    offsets = sentence.token_char_offsets()

    def char_span(span: TokenSpan) -> tuple[int, int] | None:
        start, end = offsets[span[0] - 1], offsets[span[1] - 1]
        if start is None or end is None:
            return None
        return (start[0], end[1])

    mentions: list[SentimentMention] = []
    for span, canonical in aspects:
        anchor = _span_head(sentence, span)
        for op_index, entry in opinions:
            distance = _tree_distance(adjacency, op_index, anchor)
            if distance is None or not 1 <= distance <= MAX_PAIR_DISTANCE:
                continue
            negated = any(norms[n - 1] in negations.terms for n in adjacency[op_index])
            polarity = entry.polarity.flipped() if negated else entry.polarity
            mentions.append(SentimentMention(
                aspect_term=canonical, aspect_span=span,
                opinion_term=entry.term, opinion_span=op_index,
                polarity=polarity, negated=negated,
                sentence_ref=sentence_ref, sentence_text=sentence.text,
                aspect_char_span=char_span(span),
                opinion_char_span=char_span((op_index, op_index))))
    mentions.sort(key=lambda m: (m.aspect_span, m.opinion_span))
    return mentions


def _tree_distance(adjacency: dict[int, set[int]], a: int, b: int) -> int | None:
    """Undirected path length between two tokens, capped at MAX_PAIR_DISTANCE."""
    if a == b:
        return 0
    if b in adjacency[a]:
        return 1
    if adjacency[a] & adjacency[b]:
        return 2
    return None


def classify_corpus(corpus: ParsedCorpus, lex: Lexicons,
                    negations: NegationLexicon) -> list[SentimentMention]:
    """Mentions for every sentence, in canonical (doc, sentence, span) order."""
    mentions: list[SentimentMention] = []
    for index, sentence in enumerate(corpus.sentences):
        mentions.extend(find_mentions(sentence, lex, negations,
                                      sentence_ref=(sentence.doc_id, index)))
    return mentions
