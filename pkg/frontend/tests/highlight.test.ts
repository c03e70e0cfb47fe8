import { describe, expect, it } from "vitest";

import { evidenceSpans, segment } from "../src/highlight.js";
import type { EvidenceRow } from "../src/types.js";

describe("segment", () => {
  it("splits text around one span", () => {
    const parts = segment("The food was great.", [{ start: 4, end: 8, cls: "aspect" }]);
    expect(parts).toEqual([
      { text: "The ", cls: null },
      { text: "food", cls: "aspect" },
      { text: " was great.", cls: null },
    ]);
  });

  it("concatenates back to the original text", () => {
    const text = "The waiting service was slow.";
    const parts = segment(text, [
      { start: 12, end: 19, cls: "aspect" },
      { start: 24, end: 28, cls: "negative" },
    ]);
    expect(parts.map((p) => p.text).join("")).toBe(text);
    expect(parts.filter((p) => p.cls !== null)).toHaveLength(2);
  });

  it("drops invalid and overlapping spans", () => {
    const text = "abcdef";
    const parts = segment(text, [
      { start: 2, end: 2, cls: "aspect" },      // empty
      { start: -1, end: 3, cls: "aspect" },     // out of range
      { start: 4, end: 99, cls: "aspect" },     // out of range
      { start: 1, end: 4, cls: "positive" },
      { start: 3, end: 5, cls: "negative" },    // overlaps the previous
    ]);
    expect(parts).toEqual([
      { text: "a", cls: null },
      { text: "bcd", cls: "positive" },
      { text: "ef", cls: null },
    ]);
  });

  it("handles no spans", () => {
    expect(segment("plain", [])).toEqual([{ text: "plain", cls: null }]);
  });
});

describe("evidenceSpans", () => {
  const base: EvidenceRow = {
    sentence_text: "The food was great.",
    aspect_span: [4, 8],
    opinion_span: [13, 18],
    polarity: "POS",
  };

  it("marks the aspect blue and a positive opinion green", () => {
    expect(evidenceSpans(base)).toEqual([
      { start: 4, end: 8, cls: "aspect" },
      { start: 13, end: 18, cls: "positive" },
    ]);
  });

  it("marks a negative opinion red", () => {
    const spans = evidenceSpans({ ...base, polarity: "NEG" });
    expect(spans[1]).toEqual({ start: 13, end: 18, cls: "negative" });
  });
});
