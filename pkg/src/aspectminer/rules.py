"""Dependency-relation extraction rules for aspect/opinion co-extraction.

A rule proposes a new term of one kind (aspect or opinion) from a known term
of the same or the other kind, licensed by a dependency configuration:

* ``direct``       a single edge between the known and the extracted token;
                   the rule fixes which endpoint is the dependent
* ``conjunction``  a coordination edge, matched in either direction
* ``shared_head``  known and extracted token are co-dependents of one head,
                   each through its own relation-label set

Extracted aspects are expanded to noun-phrase spans (compound/flat children);
extracted opinions stay single tokens. All label sets are plain strings so
the defaults can be swapped for another parser's label inventory via a rule
file (see ``load_rule_file``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .common import LexiconFormatError, TermKind
from .conllu import ParsedSentence, SentenceRef, TokenSpan, lemma_or_surface, span_term

ASPECT_POS = frozenset({"NOUN", "PROPN"})
OPINION_POS = frozenset({"ADJ"})

NP_EXPANSION_LABELS = frozenset({"compound", "flat"})


@dataclass(frozen=True)
class DirectPattern:
    labels: frozenset[str]
    known_is_dependent: bool


@dataclass(frozen=True)
class ConjunctionPattern:
    labels: frozenset[str]


@dataclass(frozen=True)
class SharedHeadPattern:
    known_labels: frozenset[str]
    extracted_labels: frozenset[str]


Pattern = DirectPattern | ConjunctionPattern | SharedHeadPattern


@dataclass(frozen=True)
class ExtractionRule:
    id: str
    known_kind: TermKind
    extracted_kind: TermKind
    pattern: Pattern
    extracted_pos: frozenset[str]

    def __post_init__(self):
        if not self.extracted_pos:
            raise ValueError(f"rule {self.id}: empty POS filter")
        if isinstance(self.pattern, DirectPattern) and not self.pattern.labels:
            raise ValueError(f"rule {self.id}: empty label set")
        if isinstance(self.pattern, ConjunctionPattern) and not self.pattern.labels:
            raise ValueError(f"rule {self.id}: empty label set")
        if isinstance(self.pattern, SharedHeadPattern) and not (
                self.pattern.known_labels and self.pattern.extracted_labels):
            raise ValueError(f"rule {self.id}: empty label set")


@dataclass(frozen=True)
class RuleMatch:
    rule_id: str
    known_term: str
    extracted_term: str
    extracted_kind: TermKind
    sentence_ref: SentenceRef
    token_span: TokenSpan


def default_rule_set() -> list[ExtractionRule]:
    """The eight built-in double-propagation rules over UD-style labels.

    The advmod label on R5's known side lets intensified copular predicates
    ("the food was super tasty") propagate from the intensifier to the subject.
    """
    return [
        ExtractionRule("R1", TermKind.OPINION, TermKind.ASPECT,
                       DirectPattern(frozenset({"amod"}), known_is_dependent=True),
                       ASPECT_POS),
        ExtractionRule("R2", TermKind.ASPECT, TermKind.OPINION,
                       DirectPattern(frozenset({"nsubj"}), known_is_dependent=True),
                       OPINION_POS),
        ExtractionRule("R3", TermKind.ASPECT, TermKind.ASPECT,
                       ConjunctionPattern(frozenset({"conj"})),
                       ASPECT_POS),
        ExtractionRule("R4", TermKind.OPINION, TermKind.OPINION,
                       ConjunctionPattern(frozenset({"conj"})),
                       OPINION_POS),
        ExtractionRule("R5", TermKind.OPINION, TermKind.ASPECT,
                       SharedHeadPattern(frozenset({"advmod", "xcomp", "obj", "dobj"}),
                                         frozenset({"nsubj"})),
                       ASPECT_POS),
        ExtractionRule("R6", TermKind.ASPECT, TermKind.OPINION,
                       DirectPattern(frozenset({"amod"}), known_is_dependent=False),
                       OPINION_POS),
        ExtractionRule("R7", TermKind.ASPECT, TermKind.ASPECT,
                       SharedHeadPattern(frozenset({"nsubj", "obj", "dobj"}),
                                         frozenset({"nsubj", "obj", "dobj"})),
                       ASPECT_POS),
        ExtractionRule("R8", TermKind.OPINION, TermKind.OPINION,
                       SharedHeadPattern(frozenset({"amod"}), frozenset({"amod"})),
                       OPINION_POS),
    ]


def expand_noun_phrase(sentence: ParsedSentence, head_index: int) -> TokenSpan:
    """Span of the head plus contiguous left-adjacent compound/flat children.

    amod dependents are never absorbed, so opinion modifiers stay outside the
    aspect span.
    """
    start = head_index
    while start > 1:
        left = sentence.token(start - 1)
        if left.head == head_index and left.deprel in NP_EXPANSION_LABELS:
            start -= 1
        else:
            break
    return (start, head_index)


def _known_match(sentence: ParsedSentence, token_index: int, kind: TermKind,
                 known_opinions: set[str], known_aspects: set[str]) -> str | None:
    """Normalized known term matched at a token, or None.

    Aspects also match on the expanded noun-phrase span so multiword aspects
    acquired earlier keep propagating.
    """
    norm = lemma_or_surface(sentence.token(token_index))
    if kind is TermKind.OPINION:
        return norm if norm in known_opinions else None
    if norm in known_aspects:
        return norm
    span = expand_noun_phrase(sentence, token_index)
    if span != (token_index, token_index):
        expanded = span_term(sentence, span)
        if expanded in known_aspects:
            return expanded
    return None


def _candidate_pairs(sentence: ParsedSentence, pattern: Pattern) -> Iterator[tuple[int, int]]:
    """Yield (known_index, extracted_index) pairs the pattern licenses."""
    if isinstance(pattern, DirectPattern):
        for t in sentence.tokens:
            if t.head > 0 and t.deprel in pattern.labels:
                if pattern.known_is_dependent:
                    yield (t.index, t.head)
                else:
                    yield (t.head, t.index)
    elif isinstance(pattern, ConjunctionPattern):
        for t in sentence.tokens:
            if t.head > 0 and t.deprel in pattern.labels:
                yield (t.index, t.head)
                yield (t.head, t.index)
    else:
        for k in sentence.tokens:
            if k.head <= 0 or k.deprel not in pattern.known_labels:
                continue
            for e in sentence.tokens:
                if e.index != k.index and e.head == k.head and e.deprel in pattern.extracted_labels:
                    yield (k.index, e.index)


def iter_matches(sentence: ParsedSentence, sentence_ref: SentenceRef,
                 rules: Iterable[ExtractionRule],
                 known_opinions: set[str], known_aspects: set[str],
                 skip_known: bool = True) -> Iterator[RuleMatch]:
    """Raw rule matches, not deduplicated or ordered.

    With skip_known=False, terms already in the known set of their kind are
    still reported; the bootstrap uses this for frequency counting.
    """
    for rule in rules:
        for k_idx, e_idx in _candidate_pairs(sentence, rule.pattern):
            known_term = _known_match(sentence, k_idx, rule.known_kind,
                                      known_opinions, known_aspects)
            if known_term is None:
                continue
            extracted = sentence.token(e_idx)
            if extracted.pos not in rule.extracted_pos:
                continue
            if rule.extracted_kind is TermKind.ASPECT:
                span = expand_noun_phrase(sentence, e_idx)
            else:
                span = (e_idx, e_idx)
            term = span_term(sentence, span)
            if skip_known:
                known_set = known_aspects if rule.extracted_kind is TermKind.ASPECT else known_opinions
                if term in known_set:
                    continue
            yield RuleMatch(rule_id=rule.id, known_term=known_term, extracted_term=term,
                            extracted_kind=rule.extracted_kind,
                            sentence_ref=sentence_ref, token_span=span)


def match_rules(sentence: ParsedSentence, rules: list[ExtractionRule],
                known_opinions: set[str], known_aspects: set[str],
                sentence_ref: SentenceRef = ("", 0)) -> list[RuleMatch]:
    """All rule matches in one sentence, in canonical order.

    Matches are ordered by (token_span, rule id) and deduplicated per
    (extracted term, token span); the first match in canonical order wins.
    """
    raw = list(iter_matches(sentence, sentence_ref, rules, known_opinions, known_aspects))
    raw.sort(key=lambda m: (m.token_span, m.rule_id, m.known_term))
    out: list[RuleMatch] = []
    seen: set[tuple[str, TokenSpan]] = set()
    for m in raw:
        key = (m.extracted_term, m.token_span)
        if key in seen:
            continue
        seen.add(key)
        out.append(m)
    return out


_PATTERN_NAMES = {"direct_dep", "direct_head", "conjunction", "shared_head"}


def _parse_labels(field: str) -> frozenset[str]:
    labels = frozenset(x.strip() for x in field.split("|") if x.strip())
    if not labels:
        raise ValueError("empty label set")
    return labels


def load_rule_file(path: str) -> list[ExtractionRule]:
    """Parse a rule override file.

    One rule per line, comma-separated:
    ``id,known_kind,extracted_kind,pattern,labels,pos_filter``
    where pattern is direct_dep, direct_head, conjunction or shared_head;
    labels use ``|`` within a set and ``>`` between the shared_head known and
    extracted sets; pos_filter is ``|``-separated UPOS tags. ``#`` starts a
    comment.
    """
    rules: list[ExtractionRule] = []
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 6:
                raise LexiconFormatError(f"{path}:{line_no}: expected 6 fields, got {len(parts)}")
            rule_id, known_s, extracted_s, pattern_s, labels_s, pos_s = parts
            try:
                known_kind = TermKind(known_s.lower())
                extracted_kind = TermKind(extracted_s.lower())
            except ValueError:
                raise LexiconFormatError(f"{path}:{line_no}: unknown term kind") from None
            if pattern_s not in _PATTERN_NAMES:
                raise LexiconFormatError(f"{path}:{line_no}: unknown pattern {pattern_s!r}")
            try:
                if pattern_s == "shared_head":
                    if ">" not in labels_s:
                        raise ValueError("shared_head needs known>extracted label sets")
                    known_l, extracted_l = labels_s.split(">", 1)
                    pattern: Pattern = SharedHeadPattern(_parse_labels(known_l),
                                                         _parse_labels(extracted_l))
                elif pattern_s == "conjunction":
                    pattern = ConjunctionPattern(_parse_labels(labels_s))
                else:
                    pattern = DirectPattern(_parse_labels(labels_s),
                                            known_is_dependent=(pattern_s == "direct_dep"))
                rule = ExtractionRule(rule_id, known_kind, extracted_kind, pattern,
                                      _parse_labels(pos_s))
            except ValueError as exc:
                raise LexiconFormatError(f"{path}:{line_no}: {exc}") from None
            rules.append(rule)
    if not rules:
        raise LexiconFormatError(f"{path}: no rules defined")
    return rules


def save_rule_file(rules: list[ExtractionRule], path: str) -> None:
    lines = ["# id,known_kind,extracted_kind,pattern,labels,pos_filter"]
    for r in rules:
        if isinstance(r.pattern, SharedHeadPattern):
            pattern_s = "shared_head"
            labels_s = "|".join(sorted(r.pattern.known_labels)) + ">" + \
                "|".join(sorted(r.pattern.extracted_labels))
        elif isinstance(r.pattern, ConjunctionPattern):
            pattern_s = "conjunction"
            labels_s = "|".join(sorted(r.pattern.labels))
        else:
            pattern_s = "direct_dep" if r.pattern.known_is_dependent else "direct_head"
            labels_s = "|".join(sorted(r.pattern.labels))
        lines.append(",".join([r.id, r.known_kind.value, r.extracted_kind.value,
                               pattern_s, labels_s, "|".join(sorted(r.extracted_pos))]))
    with open(path, "w", encoding="utf-8") as f:
        f.write("\n".join(lines) + "\n")
