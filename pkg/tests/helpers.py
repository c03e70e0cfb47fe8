"""Shared test utilities: sentence builders and independent brute-force oracles.

The oracles deliberately re-implement matching from first principles (own
normalization, own span expansion, own pattern checks) so they stay
independent of the code paths they verify.
"""

from __future__ import annotations

import numpy as np

from aspectminer.common import TermKind
from aspectminer.conllu import ParsedCorpus, ParsedSentence, Token
from aspectminer.rules import (ConjunctionPattern, DirectPattern, ExtractionRule,
                               RuleMatch, SharedHeadPattern)


def build_sentence(rows, text=None, doc_id="test") -> ParsedSentence:
    """rows: list of (surface, lemma, upos, head, deprel)."""
    tokens = tuple(Token(index=i, surface=r[0], lemma=r[1], pos=r[2], head=r[3], deprel=r[4])
                   for i, r in enumerate(rows, start=1))
    if text is None:
        text = " ".join(r[0] for r in rows)
    return ParsedSentence(tokens=tokens, text=text, doc_id=doc_id)


def build_corpus(sentences, source="synthetic") -> ParsedCorpus:
    return ParsedCorpus(sentences=tuple(sentences), source_path=source)


def conllu_block(rows, text=None) -> str:
    lines = []
    if text is not None:
        lines.append(f"# text = {text}")
    for i, (surface, lemma, upos, head, deprel) in enumerate(rows, start=1):
        lines.append("\t".join([str(i), surface, lemma, upos, "_", "_",
                                str(head), deprel, "_", "_"]))
    return "\n".join(lines) + "\n"


def nice_decor_rows():
    return [("Nice", "nice", "ADJ", 2, "amod"),
            ("decor", "decor", "NOUN", 0, "root"),
            (".", ".", "PUNCT", 2, "punct")]


def food_tasty_rows():
    return [("The", "the", "DET", 2, "det"),
            ("food", "food", "NOUN", 5, "nsubj"),
            ("was", "be", "AUX", 5, "cop"),
            ("super", "super", "ADV", 5, "advmod"),
            ("tasty", "tasty", "ADJ", 0, "root"),
            (".", ".", "PUNCT", 5, "punct")]


# --- independent rule-matching oracle ---------------------------------------

def _norm(token: Token) -> str:
    lemma = token.lemma
    if lemma and lemma != "_":
        return lemma.lower()
    return token.surface.lower()


def _expand(sentence: ParsedSentence, head_index: int) -> tuple[int, int]:
    start = head_index
    while start > 1:
        candidate = sentence.tokens[start - 2]
        if candidate.head == head_index and candidate.deprel in ("compound", "flat"):
            start -= 1
        else:
            break
    return (start, head_index)


def _term_of_span(sentence: ParsedSentence, span) -> str:
    return " ".join(_norm(sentence.tokens[i - 1]) for i in range(span[0], span[1] + 1))


def _oracle_known(sentence, index, kind, known_opinions, known_aspects):
    norm = _norm(sentence.tokens[index - 1])
    if kind is TermKind.OPINION:
        return norm if norm in known_opinions else None
    if norm in known_aspects:
        return norm
    span = _expand(sentence, index)
    if span != (index, index) and _term_of_span(sentence, span) in known_aspects:
        return _term_of_span(sentence, span)
    return None


def _oracle_pattern_holds(sentence: ParsedSentence, pattern, k: int, e: int) -> bool:
    tok_k = sentence.tokens[k - 1]
    tok_e = sentence.tokens[e - 1]
    if isinstance(pattern, DirectPattern):
        if pattern.known_is_dependent:
            return tok_k.head == e and tok_k.deprel in pattern.labels
        return tok_e.head == k and tok_e.deprel in pattern.labels
    if isinstance(pattern, ConjunctionPattern):
        return (tok_k.head == e and tok_k.deprel in pattern.labels) or \
               (tok_e.head == k and tok_e.deprel in pattern.labels)
    if isinstance(pattern, SharedHeadPattern):
        return (tok_k.head != 0 and tok_k.head == tok_e.head and
                tok_k.deprel in pattern.known_labels and
                tok_e.deprel in pattern.extracted_labels)
    raise TypeError(pattern)


def brute_force_matches(sentence: ParsedSentence, rules: list[ExtractionRule],
                        known_opinions: set[str], known_aspects: set[str],
                        sentence_ref=("", 0)) -> list[RuleMatch]:
    """Exhaustive all-pairs matcher mirroring the documented contract."""
    raw = []
    n = len(sentence.tokens)
    for rule in rules:
        for k in range(1, n + 1):
            for e in range(1, n + 1):
                if k == e:
                    continue
                known = _oracle_known(sentence, k, rule.known_kind,
                                      known_opinions, known_aspects)
                if known is None:
                    continue
                if not _oracle_pattern_holds(sentence, rule.pattern, k, e):
                    continue
                if sentence.tokens[e - 1].pos not in rule.extracted_pos:
                    continue
                if rule.extracted_kind is TermKind.ASPECT:
                    span = _expand(sentence, e)
                else:
                    span = (e, e)
                term = _term_of_span(sentence, span)
                known_set = known_aspects if rule.extracted_kind is TermKind.ASPECT \
                    else known_opinions
                if term in known_set:
                    continue
                raw.append(RuleMatch(rule_id=rule.id, known_term=known, extracted_term=term,
                                     extracted_kind=rule.extracted_kind,
                                     sentence_ref=sentence_ref, token_span=span))
    raw.sort(key=lambda m: (m.token_span, m.rule_id, m.known_term))
    out, seen = [], set()
    for m in raw:
        key = (m.extracted_term, m.token_span)
        if key not in seen:
            seen.add(key)
            out.append(m)
    return out


# --- independent dependency-distance oracle ----------------------------------

def all_pairs_distances(sentence: ParsedSentence) -> np.ndarray:
    """Floyd-Warshall over the undirected dependency graph (1-based indices)."""
    n = len(sentence.tokens)
    dist = np.full((n + 1, n + 1), 10 ** 6, dtype=int)
    for i in range(1, n + 1):
        dist[i][i] = 0
    for t in sentence.tokens:
        if t.head > 0:
            dist[t.index][t.head] = 1
            dist[t.head][t.index] = 1
    for mid in range(1, n + 1):
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                if dist[a][mid] + dist[mid][b] < dist[a][b]:
                    dist[a][b] = dist[a][mid] + dist[mid][b]
    return dist


def brute_force_mentions(sentence: ParsedSentence, lex, negations) -> list[tuple]:
    """Enumerate (aspect span, canonical, opinion index, polarity, negated)
    with path length checked via all-pairs shortest distances."""
    from aspectminer.classify import find_aspect_occurrences

    dist = all_pairs_distances(sentence)
    norms = [_norm(t) for t in sentence.tokens]
    opinion_entries = {o.term: o for o in lex.opinions if o.enabled}
    results = []
    for span, canonical in find_aspect_occurrences(sentence, lex):
        indices = set(range(span[0], span[1] + 1))
        anchor = None
        for i in sorted(indices, reverse=True):
            head = sentence.tokens[i - 1].head
            if head == 0 or head not in indices:
                anchor = i
                break
        for i, norm in enumerate(norms, start=1):
            entry = opinion_entries.get(norm)
            if entry is None:
                continue
            if not 1 <= dist[i][anchor] <= 2:
                continue
            negated = any(dist[i][j] == 1 and norms[j - 1] in negations.terms
                          for j in range(1, len(norms) + 1))
            polarity = entry.polarity.flipped() if negated else entry.polarity
            results.append((span, canonical, i, polarity, negated))
    results.sort(key=lambda r: (r[0], r[2]))
    return results


# --- random tree generator ----------------------------------------------------

WORDS = ["food", "decor", "staff", "menu", "service", "nice", "tasty", "great",
         "cold", "slow", "very", "was", "and", "waiter", "fresh", "place",
         "not", "never"]
POS_TAGS = ["NOUN", "PROPN", "ADJ", "ADV", "VERB", "DET", "AUX", "PUNCT"]
DEPRELS = ["amod", "nsubj", "conj", "obj", "dobj", "advmod", "xcomp", "det",
           "cop", "punct", "compound", "flat", "case"]


def random_sentence(rng: np.random.Generator, max_tokens: int = 10) -> ParsedSentence:
    n = int(rng.integers(2, max_tokens + 1))
    order = rng.permutation(n) + 1
    heads = {int(order[0]): 0}
    for k in range(1, n):
        parent = int(order[int(rng.integers(0, k))])
        heads[int(order[k])] = parent
    rows = []
    for i in range(1, n + 1):
        word = str(rng.choice(WORDS))
        pos = str(rng.choice(POS_TAGS))
        deprel = "root" if heads[i] == 0 else str(rng.choice(DEPRELS))
        rows.append((word, word, pos, heads[i], deprel))
    return build_sentence(rows)
