/** HTML string rendering for the workbench views.
 *
 * Kept DOM-free so the exact markup is unit-testable in node; the browser
 * entry assigns the strings to innerHTML and wires events by delegation.
 */

import { evidenceSpans, segment, type HighlightSpan } from "./highlight.js";
import type { LexiconEditorModel } from "./lexiconEditor.js";
import type { ReportViewModel } from "./reportView.js";
import type { ExampleRow } from "./types.js";

export function escapeHtml(value: string): string {
  return value
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function renderHighlighted(text: string, spans: HighlightSpan[]): string {
  return segment(text, spans)
    .map((part) =>
      part.cls === null
        ? escapeHtml(part.text)
        : `<mark class="hl-${part.cls}">${escapeHtml(part.text)}</mark>`,
    )
    .join("");
}

export function renderAspectTable(model: LexiconEditorModel): string {
  const rows = model.aspects
    .map((a) => {
      const dirty = model.isDirty("aspect", a.term) ? " dirty" : "";
      const aliases = a.aliases
        .map(
          (alias, i) =>
            `<td><input class="alias" data-term="${escapeHtml(a.term)}" ` +
            `data-slot="${i + 1}" value="${escapeHtml(alias)}"></td>`,
        )
        .join("");
      return (
        `<tr class="aspect-row${dirty}" data-term="${escapeHtml(a.term)}">` +
        `<td><input type="checkbox" class="enabled" data-kind="aspect" ` +
        `data-term="${escapeHtml(a.term)}"${a.enabled ? " checked" : ""}></td>` +
        `<td class="term">${escapeHtml(a.term)}</td>${aliases}` +
        `<td class="frequency">${a.frequency}</td>` +
        `<td><button class="delete" data-term="${escapeHtml(a.term)}">remove</button></td></tr>`
      );
    })
    .join("");
  return (
    `<table class="lexicon aspects"><thead><tr><th></th><th>Term</th>` +
    `<th>Alias1</th><th>Alias2</th><th>Alias3</th><th>Frequency</th><th></th>` +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderOpinionTable(model: LexiconEditorModel): string {
  const rows = model.opinions
    .map((o) => {
      const dirty = model.isDirty("opinion", o.term) ? " dirty" : "";
      return (
        `<tr class="opinion-row${dirty}" data-term="${escapeHtml(o.term)}">` +
        `<td><input type="checkbox" class="enabled" data-kind="opinion" ` +
        `data-term="${escapeHtml(o.term)}"${o.enabled ? " checked" : ""}></td>` +
        `<td class="term">${escapeHtml(o.term)}</td>` +
        `<td><select class="polarity" data-term="${escapeHtml(o.term)}">` +
        `<option value="POS"${o.polarity === "POS" ? " selected" : ""}>POS</option>` +
        `<option value="NEG"${o.polarity === "NEG" ? " selected" : ""}>NEG</option>` +
        `</select></td>` +
        `<td><input class="score" data-term="${escapeHtml(o.term)}" ` +
        `value="${o.score.toFixed(6)}"></td></tr>`
      );
    })
    .join("");
  return (
    `<table class="lexicon opinions"><thead><tr><th></th><th>Term</th>` +
    `<th>Polarity</th><th>Score</th></tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderExamples(term: string, examples: ExampleRow[]): string {
  if (examples.length === 0) {
    return `<p class="empty">no examples of "${escapeHtml(term)}" in the input dataset</p>`;
  }
  const items = examples
    .map((example) => {
      const [start, end] = example.span;
      const html = renderHighlighted(example.sentence_text, [
        { start, end, cls: "aspect" },
      ]);
      return `<li class="example">${html}</li>`;
    })
    .join("");
  return `<ul class="examples">${items}</ul>`;
}

export function renderReport(view: ReportViewModel): string {
  if (view.rows.length === 0) {
    return `<p class="empty">no sentiment mentions detected</p>`;
  }
  const bars = view.rows
    .map((row) => {
      const geometry = view.geometry(row);
      const selected = view.selectedAspect === row.aspect_term ? " selected" : "";
      return (
        `<div class="report-row${selected}" data-term="${escapeHtml(row.aspect_term)}">` +
        `<span class="label">${escapeHtml(row.aspect_term)}</span>` +
        `<span class="bar">` +
        `<span class="bar-positive" style="width:${geometry.positivePct}%" ` +
        `data-count="${row.positive_count}" ` +
        `title="${escapeHtml(view.tooltip(row, "POS"))}"></span>` +
        `<span class="bar-negative" style="width:${geometry.negativePct}%" ` +
        `data-count="${row.negative_count}" ` +
        `title="${escapeHtml(view.tooltip(row, "NEG"))}"></span>` +
        `</span></div>`
      );
    })
    .join("");
  return `<div class="report">${bars}</div>`;
}

export function renderEvidence(view: ReportViewModel): string {
  if (view.selectedAspect === null) {
    return `<p class="empty">click a bar to see the supporting sentences</p>`;
  }
  if (view.evidence.length === 0) {
    return `<p class="empty">no evidence for "${escapeHtml(view.selectedAspect)}"</p>`;
  }
  const items = view.evidence
    .map(
      (row) =>
        `<li class="evidence ${row.polarity === "POS" ? "positive" : "negative"}">` +
        renderHighlighted(row.sentence_text, evidenceSpans(row)) +
        `</li>`,
    )
    .join("");
  return (
    `<h3>sentences about "${escapeHtml(view.selectedAspect)}"</h3>` +
    `<ul class="evidence-list">${items}</ul>`
  );
}
