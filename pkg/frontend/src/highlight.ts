/** Split sentence text into plain and highlighted segments.
 *
 * Spans are server-computed character offsets; this module only slices. The
 * segments always concatenate back to the original text. Overlapping spans
 * keep the earlier (then longer) one so the output stays well formed.
 */

import type { EvidenceRow } from "./types.js";

export type HighlightClass = "aspect" | "positive" | "negative";

export interface HighlightSpan {
  start: number;
  end: number;
  cls: HighlightClass;
}

export interface Segment {
  text: string;
  cls: HighlightClass | null;
}

export function segment(text: string, spans: HighlightSpan[]): Segment[] {
  const valid = spans
    .filter((s) => s.start >= 0 && s.start < s.end && s.end <= text.length)
    .sort((a, b) => a.start - b.start || b.end - a.end);
  const chosen: HighlightSpan[] = [];
  let cursor = 0;
  for (const span of valid) {
    if (span.start < cursor) continue; // overlaps the previous highlight
    chosen.push(span);
    cursor = span.end;
  }
  const segments: Segment[] = [];
  let position = 0;
  for (const span of chosen) {
    if (span.start > position) {
      segments.push({ text: text.slice(position, span.start), cls: null });
    }
    segments.push({ text: text.slice(span.start, span.end), cls: span.cls });
    position = span.end;
  }
  if (position < text.length) {
    segments.push({ text: text.slice(position), cls: null });
  }
  return segments;
}

/** Highlight plan for one evidence sentence: aspect in blue, the opinion in
 * green or red according to the mention polarity. */
export function evidenceSpans(row: EvidenceRow): HighlightSpan[] {
  return [
    { start: row.aspect_span[0], end: row.aspect_span[1], cls: "aspect" },
    {
      start: row.opinion_span[0],
      end: row.opinion_span[1],
      cls: row.polarity === "POS" ? "positive" : "negative",
    },
  ];
}
