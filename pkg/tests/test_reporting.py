import json

from aspectminer.classify import SentimentMention
from aspectminer.common import Polarity
from aspectminer.lexicons import AspectEntry, Lexicons
from aspectminer.reporting import (build_report, report_rows_as_dicts, write_report_csv,
                                   write_report_json)


def mention(aspect, polarity, text="some sentence", alias_of=None):
    return SentimentMention(aspect_term=aspect, aspect_span=(1, 1), opinion_term="x",
                            opinion_span=2, polarity=polarity, negated=False,
                            sentence_ref=("d", 0), sentence_text=text,
                            aspect_char_span=(0, 4), opinion_char_span=(5, 6))


def test_empty_mentions_empty_report():
    assert build_report([], Lexicons()) == []


def test_alias_mentions_fold_into_canonical_row():
    lex = Lexicons(aspects=[AspectEntry(term="drinks", aliases=["beverages"])])
    mentions = [mention("drinks", Polarity.POSITIVE),
                mention("drinks", Polarity.POSITIVE),
                mention("drinks", Polarity.POSITIVE),
                mention("beverages", Polarity.NEGATIVE)]
    report = build_report(mentions, lex)
    assert len(report) == 1
    row = report[0]
    assert row.aspect_term == "drinks"
    assert row.positive_count == 3
    assert row.negative_count == 1
    assert len(row.evidence) == 4


def test_counts_equal_flat_recount():
    lex = Lexicons()
    mentions = [mention("food", Polarity.POSITIVE), mention("food", Polarity.NEGATIVE),
                mention("staff", Polarity.NEGATIVE), mention("food", Polarity.POSITIVE)]
    report = build_report(mentions, lex)
    for row in report:
        positive = sum(1 for m in mentions if m.aspect_term == row.aspect_term
                       and m.polarity is Polarity.POSITIVE)
        negative = sum(1 for m in mentions if m.aspect_term == row.aspect_term
                       and m.polarity is Polarity.NEGATIVE)
        assert (row.positive_count, row.negative_count) == (positive, negative)
        assert row.positive_count == sum(1 for e in row.evidence
                                         if e.polarity is Polarity.POSITIVE)
        assert row.negative_count == sum(1 for e in row.evidence
                                         if e.polarity is Polarity.NEGATIVE)


def test_rows_sorted_by_total_then_term():
    lex = Lexicons()
    mentions = [mention("zebra", Polarity.POSITIVE), mention("zebra", Polarity.NEGATIVE),
                mention("apple", Polarity.POSITIVE), mention("apple", Polarity.POSITIVE),
                mention("mango", Polarity.POSITIVE)]
    report = build_report(mentions, lex)
    assert [r.aspect_term for r in report] == ["apple", "zebra", "mango"]


def test_report_json_and_csv_exports(tmp_path):
    lex = Lexicons()
    mentions = [mention("food", Polarity.POSITIVE), mention("food", Polarity.NEGATIVE)]
    report = build_report(mentions, lex)
    json_path = tmp_path / "report.json"
    csv_path = tmp_path / "report.csv"
    write_report_json(report, str(json_path))
    write_report_csv(report, str(csv_path))
    payload = json.loads(json_path.read_text(encoding="utf-8"))
    assert payload["rows"][0]["aspect_term"] == "food"
    assert payload["rows"][0]["positive_count"] == 1
    assert payload["rows"][0]["evidence"][0]["aspect_span"] == [0, 4]
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "Term,Positive,Negative"
    assert lines[1] == "food,1,1"


def test_rows_as_dicts_round_trip_values():
    lex = Lexicons()
    report = build_report([mention("food", Polarity.POSITIVE)], lex)
    [row] = report_rows_as_dicts(report)
    assert row["positive_count"] == 1
    assert row["negative_count"] == 0
    assert row["evidence"][0]["polarity"] == "POS"
