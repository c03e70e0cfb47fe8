"""Fixpoint bootstrap: iterate the extraction rules from a seed opinion lexicon.

Each iteration matches all rules against the whole corpus using the terms
known so far (seeds plus everything acquired earlier), then absorbs the newly
extracted terms. The loop stops when an iteration acquires nothing or the
iteration cap is hit. A final counting pass records, for every acquired term,
all corpus sites where some rule extracts it given the final known sets.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .common import LexiconFormatError, Polarity, TermKind
from .conllu import ParsedCorpus, SentenceRef, TokenSpan
from .rules import ExtractionRule, iter_matches

DEFAULT_MAX_ITERATIONS = 10
DEFAULT_MIN_FREQUENCY = 2
DEFAULT_EXAMPLE_CAP = 20


@dataclass
class CandidateTerm:
    term: str
    kind: TermKind
    frequency: int
    examples: list[tuple[SentenceRef, TokenSpan]]
    first_iteration: int


@dataclass(frozen=True)
class SeedLexicon:
    terms: dict[str, Polarity]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("seed lexicon must be non-empty")

    def __contains__(self, term: str) -> bool:
        return term in self.terms

    def polarity(self, term: str) -> Polarity | None:
        return self.terms.get(term)


@dataclass
class BootstrapResult:
    aspect_candidates: list[CandidateTerm]
    opinion_candidates: list[CandidateTerm]
    iterations: int  # productive iterations before the fixpoint


def load_seed_lexicon(path: str) -> SeedLexicon:
    """Read a ``term,polarity`` CSV; polarity is POS or NEG, later rows win."""
    terms: dict[str, Polarity] = {}
    with open(path, encoding="utf-8", newline="") as f:
        for line_no, row in enumerate(csv.reader(f), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if row[0].strip().startswith("#"):
                continue
            if len(row) < 2:
                raise LexiconFormatError(f"{path}:{line_no}: expected term,polarity")
            term = row[0].strip().lower()
            pol_s = row[1].strip().upper()
            if pol_s not in ("POS", "NEG"):
                raise LexiconFormatError(f"{path}:{line_no}: unknown polarity {row[1].strip()!r}")
            terms[term] = Polarity(pol_s)
    if not terms:
        raise LexiconFormatError(f"{path}: empty seed lexicon")
    return SeedLexicon(terms)


def load_wordlist(path: str) -> set[str]:
    """Plain-text word list, one entry per line, ``#`` comments allowed."""
    words: set[str] = set()
    with open(path, encoding="utf-8") as f:
        for raw in f:
            word = raw.split("#", 1)[0].strip().lower()
            if word:
                words.add(word)
    return words


def _blocked(term: str, stopwords: set[str]) -> bool:
    return any(w in stopwords for w in term.split())


def run_bootstrap(corpus: ParsedCorpus, seeds: SeedLexicon, rules: list[ExtractionRule],
                  max_iterations: int = DEFAULT_MAX_ITERATIONS,
                  min_frequency: int = DEFAULT_MIN_FREQUENCY,
                  example_cap: int = DEFAULT_EXAMPLE_CAP,
                  stopwords: set[str] | None = None) -> BootstrapResult:
    """Run the co-extraction bootstrap to a fixpoint (or the iteration cap).

    Frequencies count the distinct corpus sites where a rule extracts the term
    under the final known sets; candidates below min_frequency are dropped.
    Seed terms are never emitted as candidates.
    """
    if len(corpus) == 0:
        raise ValueError("corpus must be non-empty")
    if max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")
    if example_cap < 1:
        raise ValueError("example_cap must be >= 1")
    stopwords = stopwords or set()

    known_opinions = set(seeds.terms)
    known_aspects: set[str] = set()
    first_iteration: dict[tuple[TermKind, str], int] = {}
    refs = [(s.doc_id, i) for i, s in enumerate(corpus.sentences)]

    iterations = 0
    for iteration in range(1, max_iterations + 1):
        new_terms: set[tuple[TermKind, str]] = set()
        for sentence, ref in zip(corpus.sentences, refs):
            for m in iter_matches(sentence, ref, rules, known_opinions, known_aspects):
                if _blocked(m.extracted_term, stopwords):
                    continue
                new_terms.add((m.extracted_kind, m.extracted_term))
        if not new_terms:
            break
        iterations = iteration
        for kind, term in new_terms:
            first_iteration.setdefault((kind, term), iteration)
            if kind is TermKind.ASPECT:
                known_aspects.add(term)
            else:
                known_opinions.add(term)

    # Count extraction sites under the final known sets. Seed opinion terms
    # that the rules re-extract from the corpus are emitted as candidates too,
    # with first_iteration 0.
    countable = set(first_iteration)
    for term in seeds.terms:
        if not _blocked(term, stopwords):
            countable.add((TermKind.OPINION, term))
    sites: dict[tuple[TermKind, str], list[tuple[SentenceRef, TokenSpan]]] = {
        key: [] for key in countable}
    for sentence, ref in zip(corpus.sentences, refs):
        seen: set[tuple[TermKind, str, TokenSpan]] = set()
        for m in iter_matches(sentence, ref, rules, known_opinions, known_aspects,
                              skip_known=False):
            key = (m.extracted_kind, m.extracted_term)
            if key not in countable:
                continue
            site = (m.extracted_kind, m.extracted_term, m.token_span)
            if site in seen:
                continue
            seen.add(site)
            sites[key].append((ref, m.token_span))

    def build(kind: TermKind) -> list[CandidateTerm]:
        out = []
        for (k, term), occurrences in sites.items():
            if k is not kind or len(occurrences) < min_frequency or not occurrences:
                continue
            occurrences.sort(key=lambda oc: (oc[0][1], oc[1]))
            out.append(CandidateTerm(term=term, kind=kind, frequency=len(occurrences),
                                     examples=occurrences[:example_cap],
                                     first_iteration=first_iteration.get((kind, term), 0)))
        out.sort(key=lambda c: (-c.frequency, c.term))
        return out

    return BootstrapResult(aspect_candidates=build(TermKind.ASPECT),
                           opinion_candidates=build(TermKind.OPINION),
                           iterations=iterations)
