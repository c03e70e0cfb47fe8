"""Shared enums, error types and term normalization."""

from __future__ import annotations

from enum import Enum


class TermKind(str, Enum):
    ASPECT = "aspect"
    OPINION = "opinion"


class Polarity(str, Enum):
    POSITIVE = "POS"
    NEGATIVE = "NEG"

    def flipped(self) -> "Polarity":
        return Polarity.NEGATIVE if self is Polarity.POSITIVE else Polarity.POSITIVE


class AspectMinerError(Exception):
    """Base class for all errors raised by this package."""


class CorpusParseError(AspectMinerError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class CorpusStructureError(AspectMinerError):
    pass


class EmptyCorpusError(AspectMinerError):
    pass


class EmbeddingFormatError(AspectMinerError):
    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class LexiconFormatError(AspectMinerError):
    """A lexicon, rule or seed file could not be parsed."""


class LexiconEditError(AspectMinerError):
    """An edit would violate a lexicon invariant; the lexicon is unchanged."""


def normalize_term(term: str) -> str:
    """Collapse whitespace and lowercase; the canonical form for term comparison."""
    return " ".join(term.lower().split())
