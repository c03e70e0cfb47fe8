"""Per-aspect sentiment report built from detected mentions."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

from .classify import SentimentMention
from .common import Polarity
from .lexicons import Lexicons


@dataclass
class EvidenceItem:
    sentence_text: str
    aspect_span: tuple[int, int]    # char offsets
    opinion_span: tuple[int, int]   # char offsets
    polarity: Polarity


@dataclass
class AspectReportRow:
    aspect_term: str
    positive_count: int = 0
    negative_count: int = 0
    evidence: list[EvidenceItem] = field(default_factory=list)


def build_report(mentions: list[SentimentMention], lex: Lexicons) -> list[AspectReportRow]:
    """One row per canonical aspect with at least one mention.

    Mentions recorded against an alias fold into the canonical row. Rows are
    sorted by descending total mention count, ties broken by term.
    """
    rows: dict[str, AspectReportRow] = {}
    for m in mentions:
        canonical = lex.canonical_aspect(m.aspect_term) or m.aspect_term
        row = rows.setdefault(canonical, AspectReportRow(aspect_term=canonical))
        if m.polarity is Polarity.POSITIVE:
            row.positive_count += 1
        else:
            row.negative_count += 1
        row.evidence.append(EvidenceItem(
            sentence_text=m.sentence_text,
            aspect_span=m.aspect_char_span or (0, 0),
            opinion_span=m.opinion_char_span or (0, 0),
            polarity=m.polarity))
    out = list(rows.values())
    out.sort(key=lambda r: (-(r.positive_count + r.negative_count), r.aspect_term))
    return out


def report_rows_as_dicts(rows: list[AspectReportRow]) -> list[dict]:
    return [{
        "aspect_term": r.aspect_term,
        "positive_count": r.positive_count,
        "negative_count": r.negative_count,
        "evidence": [{
            "sentence_text": e.sentence_text,
            "aspect_span": list(e.aspect_span),
            "opinion_span": list(e.opinion_span),
            "polarity": e.polarity.value,
        } for e in r.evidence],
    } for r in rows]


def write_report_json(rows: list[AspectReportRow], path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"rows": report_rows_as_dicts(rows)}, f,
                  ensure_ascii=False, sort_keys=True, indent=2)
        f.write("\n")


def write_report_csv(rows: list[AspectReportRow], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(["Term", "Positive", "Negative"])
        for r in rows:
            writer.writerow([r.aspect_term, r.positive_count, r.negative_count])
