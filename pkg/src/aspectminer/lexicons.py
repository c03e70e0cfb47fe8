"""Aspect and opinion lexicons: CSV persistence, validation and editing.

Lexicons are the substrate of the human curation step. Every committed edit
bumps the revision by one; an edit that would violate an invariant is
rejected whole, leaving the lexicons untouched.
"""

from __future__ import annotations

import copy
import csv
import os
from dataclasses import dataclass, field

from .common import LexiconEditError, LexiconFormatError, Polarity, normalize_term
from .conllu import ParsedCorpus, ParsedSentence, lemma_or_surface

MAX_ALIASES = 3

ASPECT_COLUMNS = ["Term", "Alias1", "Alias2", "Alias3", "Enabled", "Frequency"]
OPINION_COLUMNS = ["Term", "Polarity", "Score", "Enabled"]


@dataclass
class AspectEntry:
    term: str
    aliases: list[str] = field(default_factory=list)
    enabled: bool = True
    frequency: int = 0
    examples: list[tuple[str, tuple[int, int]]] = field(default_factory=list)


@dataclass
class OpinionEntry:
    term: str
    polarity: Polarity
    score: float
    enabled: bool = True


@dataclass
class Lexicons:
    aspects: list[AspectEntry] = field(default_factory=list)
    opinions: list[OpinionEntry] = field(default_factory=list)
    revision: int = 0
    domain_label: str = ""

    def aspect(self, term: str) -> AspectEntry | None:
        for entry in self.aspects:
            if entry.term == term:
                return entry
        return None

    def opinion(self, term: str) -> OpinionEntry | None:
        for entry in self.opinions:
            if entry.term == term:
                return entry
        return None

    def canonical_aspect(self, term: str) -> str | None:
        """Canonical term for a term that may be an alias, or None."""
        for entry in self.aspects:
            if entry.term == term or term in entry.aliases:
                return entry.term
        return None

    def structural_content(self):
        """Content compared by the save/load round-trip (examples and revision
        excluded; entry order is canonicalized since the CSVs sort rows)."""
        return (
            sorted((a.term, tuple(a.aliases), a.enabled, a.frequency) for a in self.aspects),
            sorted((o.term, o.polarity, round(o.score, 6), o.enabled) for o in self.opinions),
        )


def validate_lexicons(lex: Lexicons) -> None:
    """Raise LexiconEditError when a lexicon invariant does not hold."""
    seen: set[str] = set()
    for entry in lex.aspects:
        if len(entry.aliases) > MAX_ALIASES:
            raise LexiconEditError(f"aspect {entry.term!r} has more than {MAX_ALIASES} aliases")
        names = [entry.term] + [a for a in entry.aliases if a]
        if len(set(names)) != len(names):
            raise LexiconEditError(f"aspect {entry.term!r} repeats a term or alias")
        for name in names:
            if name in seen:
                raise LexiconEditError(f"term {name!r} appears in two aspect entries")
            seen.add(name)
    opinion_terms = [o.term for o in lex.opinions]
    dup = {t for t in opinion_terms if opinion_terms.count(t) > 1}
    if dup:
        raise LexiconEditError(f"duplicate opinion terms: {sorted(dup)}")


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _parse_bool(value: str, where: str) -> bool:
    v = value.strip().lower()
    if v == "true":
        return True
    if v == "false":
        return False
    raise LexiconFormatError(f"{where}: bad boolean {value!r}")


def save_lexicons(lex: Lexicons, out_dir: str) -> None:
    """Write aspects.csv and opinions.csv under out_dir (created if missing)."""
    validate_lexicons(lex)
    os.makedirs(out_dir, exist_ok=True)
    aspects = sorted(lex.aspects, key=lambda a: (-a.frequency, a.term))
    with open(os.path.join(out_dir, "aspects.csv"), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(ASPECT_COLUMNS)
        for a in aspects:
            aliases = (a.aliases + ["", "", ""])[:MAX_ALIASES]
            writer.writerow([a.term, *aliases, _bool_str(a.enabled), a.frequency])
    opinions = sorted(lex.opinions, key=lambda o: (-o.score, o.term))
    with open(os.path.join(out_dir, "opinions.csv"), "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(OPINION_COLUMNS)
        for o in opinions:
            writer.writerow([o.term, o.polarity.value, f"{o.score:.6f}", _bool_str(o.enabled)])


def load_lexicons(in_dir: str) -> Lexicons:
    """Inverse of save_lexicons; unknown extra columns are ignored."""
    aspects_path = os.path.join(in_dir, "aspects.csv")
    opinions_path = os.path.join(in_dir, "opinions.csv")
    for path in (aspects_path, opinions_path):
        if not os.path.exists(path):
            raise LexiconFormatError(f"missing lexicon file: {path}")

    aspects: list[AspectEntry] = []
    with open(aspects_path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        _require_columns(reader.fieldnames, ASPECT_COLUMNS, aspects_path)
        for line_no, row in enumerate(reader, start=2):
            where = f"{aspects_path}:{line_no}"
            term = (row["Term"] or "").strip()
            if not term:
                raise LexiconFormatError(f"{where}: empty aspect term")
            aliases = [(row[f"Alias{i}"] or "").strip() for i in (1, 2, 3)]
            aliases = [a for a in aliases if a]
            try:
                frequency = int(row["Frequency"])
            except (TypeError, ValueError):
                raise LexiconFormatError(f"{where}: bad frequency {row['Frequency']!r}") from None
            aspects.append(AspectEntry(term=term, aliases=aliases,
                                       enabled=_parse_bool(row["Enabled"] or "", where),
                                       frequency=frequency))

    opinions: list[OpinionEntry] = []
    with open(opinions_path, encoding="utf-8", newline="") as f:
        reader = csv.DictReader(f)
        _require_columns(reader.fieldnames, OPINION_COLUMNS, opinions_path)
        for line_no, row in enumerate(reader, start=2):
            where = f"{opinions_path}:{line_no}"
            term = (row["Term"] or "").strip()
            if not term:
                raise LexiconFormatError(f"{where}: empty opinion term")
            pol = (row["Polarity"] or "").strip().upper()
            if pol not in ("POS", "NEG"):
                raise LexiconFormatError(f"{where}: bad polarity {row['Polarity']!r}")
            try:
                score = float(row["Score"])
            except (TypeError, ValueError):
                raise LexiconFormatError(f"{where}: bad score {row['Score']!r}") from None
            opinions.append(OpinionEntry(term=term, polarity=Polarity(pol), score=score,
                                         enabled=_parse_bool(row["Enabled"] or "", where)))

    lex = Lexicons(aspects=aspects, opinions=opinions)
    try:
        validate_lexicons(lex)
    except LexiconEditError as exc:
        raise LexiconFormatError(f"{in_dir}: {exc}") from None
    return lex


def _require_columns(fieldnames, required, path):
    missing = [c for c in required if not fieldnames or c not in fieldnames]
    if missing:
        raise LexiconFormatError(f"{path}: missing columns {missing}")


EDIT_ACTIONS = {"set_enabled", "add_aspect", "delete_aspect", "set_alias",
                "add_opinion", "set_polarity", "set_score"}


@dataclass(frozen=True)
class LexiconEdit:
    action: str
    term: str
    kind: str | None = None          # "aspect" | "opinion", disambiguates set_enabled
    enabled: bool | None = None
    slot: int | None = None          # 1-3 for set_alias
    alias: str | None = None         # empty string clears the slot
    polarity: Polarity | None = None
    score: float | None = None


def apply_edit(lex: Lexicons, edit: LexiconEdit) -> Lexicons:
    """Return a new Lexicons with the edit applied and revision incremented.

    Raises LexiconEditError (leaving the input untouched) when the edit is
    invalid or would break an invariant.
    """
    if edit.action not in EDIT_ACTIONS:
        raise LexiconEditError(f"unknown edit action {edit.action!r}")
    term = normalize_term(edit.term)
    if not term:
        raise LexiconEditError("edit term must be non-empty")
    new = Lexicons(aspects=copy.deepcopy(lex.aspects), opinions=copy.deepcopy(lex.opinions),
                   revision=lex.revision + 1, domain_label=lex.domain_label)

    if edit.action == "set_enabled":
        if edit.enabled is None:
            raise LexiconEditError("set_enabled requires the enabled flag")
        target = None
        if edit.kind in (None, "aspect"):
            target = new.aspect(term)
        if target is None and edit.kind in (None, "opinion"):
            target = new.opinion(term)
        if target is None:
            raise LexiconEditError(f"unknown term {term!r}")
        target.enabled = edit.enabled
    elif edit.action == "add_aspect":
        if any(term == a.term or term in a.aliases for a in new.aspects):
            raise LexiconEditError(f"term {term!r} already exists in the aspect lexicon")
        new.aspects.append(AspectEntry(term=term))
    elif edit.action == "delete_aspect":
        entry = new.aspect(term)
        if entry is None:
            raise LexiconEditError(f"unknown aspect term {term!r}")
        new.aspects.remove(entry)
    elif edit.action == "set_alias":
        entry = new.aspect(term)
        if entry is None:
            raise LexiconEditError(f"unknown aspect term {term!r}")
        if edit.slot is None or not 1 <= edit.slot <= MAX_ALIASES:
            raise LexiconEditError("alias slot must be 1, 2 or 3")
        alias = normalize_term(edit.alias or "")
        slots = (entry.aliases + ["", "", ""])[:MAX_ALIASES]
        slots[edit.slot - 1] = alias
        entry.aliases = [a for a in slots if a]
        if alias:
            for other in new.aspects:
                if other is entry:
                    continue
                if alias == other.term or alias in other.aliases:
                    raise LexiconEditError(f"alias {alias!r} already exists elsewhere")
    elif edit.action == "add_opinion":
        if edit.polarity is None or edit.score is None:
            raise LexiconEditError("add_opinion requires polarity and score")
        if new.opinion(term) is not None:
            raise LexiconEditError(f"opinion term {term!r} already exists")
        new.opinions.append(OpinionEntry(term=term, polarity=edit.polarity, score=edit.score))
    elif edit.action == "set_polarity":
        entry = new.opinion(term)
        if entry is None:
            raise LexiconEditError(f"unknown opinion term {term!r}")
        if edit.polarity is None:
            raise LexiconEditError("set_polarity requires a polarity")
        entry.polarity = edit.polarity
    elif edit.action == "set_score":
        entry = new.opinion(term)
        if entry is None:
            raise LexiconEditError(f"unknown opinion term {term!r}")
        if edit.score is None:
            raise LexiconEditError("set_score requires a score")
        entry.score = edit.score

    validate_lexicons(new)
    return new


def collect_examples(corpus: ParsedCorpus, term: str,
                     limit: int) -> list[tuple[str, tuple[int, int]]]:
    """Up to ``limit`` sentences containing the term, with highlight offsets.

    Matching is on normalized tokens; the span covers the first occurrence in
    each sentence. Sentences where the surface cannot be aligned to the text
    are skipped.
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    words = normalize_term(term).split()
    if not words:
        return []
    out: list[tuple[str, tuple[int, int]]] = []
    for sentence in corpus.sentences:
        span = find_term_span(sentence, words)
        if span is None:
            continue
        char_span = sentence.char_span(span)
        if char_span is None:
            continue
        out.append((sentence.text, char_span))
        if len(out) >= limit:
            break
    return out


def find_term_span(sentence: ParsedSentence, words: list[str]) -> tuple[int, int] | None:
    """First 1-based token span whose normalized tokens equal ``words``."""
    norms = [lemma_or_surface(t) for t in sentence.tokens]
    n = len(words)
    for start in range(0, len(norms) - n + 1):
        if norms[start:start + n] == words:
            return (start + 1, start + n)
    return None
