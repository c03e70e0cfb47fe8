"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field

from .lexicons import AspectEntry, Lexicons, OpinionEntry
from .reporting import AspectReportRow


class ExtractRequest(BaseModel):
    dataset_path: str
    embeddings_path: str
    config_path: str | None = None


class ClassifyRequest(BaseModel):
    target_dataset_path: str


class JobResponse(BaseModel):
    job_id: str
    stage: str


class StatusResponse(BaseModel):
    job_id: str | None
    stage: str
    message: str
    lexicon_revision: int


class AspectEntryModel(BaseModel):
    term: str
    aliases: list[str] = Field(default_factory=list)
    enabled: bool = True
    frequency: int = 0

    @classmethod
    def from_entry(cls, entry: AspectEntry) -> "AspectEntryModel":
        return cls(term=entry.term, aliases=list(entry.aliases),
                   enabled=entry.enabled, frequency=entry.frequency)


class OpinionEntryModel(BaseModel):
    term: str
    polarity: str
    score: float
    enabled: bool = True

    @classmethod
    def from_entry(cls, entry: OpinionEntry) -> "OpinionEntryModel":
        return cls(term=entry.term, polarity=entry.polarity.value,
                   score=entry.score, enabled=entry.enabled)


class LexiconsResponse(BaseModel):
    revision: int
    domain_label: str
    aspects: list[AspectEntryModel]
    opinions: list[OpinionEntryModel]

    @classmethod
    def from_lexicons(cls, lex: Lexicons) -> "LexiconsResponse":
        return cls(revision=lex.revision, domain_label=lex.domain_label,
                   aspects=[AspectEntryModel.from_entry(a) for a in lex.aspects],
                   opinions=[OpinionEntryModel.from_entry(o) for o in lex.opinions])


class EditRequest(BaseModel):
    action: str
    term: str
    kind: str | None = None
    enabled: bool | None = None
    slot: int | None = None
    alias: str | None = None
    polarity: str | None = None
    score: float | None = None


class EditResponse(BaseModel):
    revision: int


class ExampleModel(BaseModel):
    sentence_text: str
    span: tuple[int, int]


class ExamplesResponse(BaseModel):
    term: str
    lexicon_revision: int
    examples: list[ExampleModel]


class EvidenceModel(BaseModel):
    sentence_text: str
    aspect_span: tuple[int, int]
    opinion_span: tuple[int, int]
    polarity: str


class ReportRowModel(BaseModel):
    aspect_term: str
    positive_count: int
    negative_count: int

    @classmethod
    def from_row(cls, row: AspectReportRow) -> "ReportRowModel":
        return cls(aspect_term=row.aspect_term, positive_count=row.positive_count,
                   negative_count=row.negative_count)


class ReportResponse(BaseModel):
    lexicon_revision: int
    rows: list[ReportRowModel]


class EvidenceResponse(BaseModel):
    aspect_term: str
    lexicon_revision: int
    rows: list[EvidenceModel]


class ErrorResponse(BaseModel):
    detail: str
