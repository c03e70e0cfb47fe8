/** Browser entry: wires the view models to the DOM.
 *
 * All state lives on the server; this file only stages edits, commits them
 * through the edit endpoint and re-renders from fresh payloads.
 */

import { ApiClient, ApiError } from "./api.js";
import { LexiconEditorModel, RevisionConflictError } from "./lexiconEditor.js";
import {
  renderAspectTable,
  renderEvidence,
  renderExamples,
  renderOpinionTable,
  renderReport,
} from "./render.js";
import { ReportViewModel } from "./reportView.js";
import type { Polarity } from "./types.js";

const client = new ApiClient("");
const editor = new LexiconEditorModel();
const report = new ReportViewModel();

function element<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing #${id}`);
  return found as T;
}

function setStatus(text: string): void {
  element("status-line").textContent = text;
}

function renderLexicons(): void {
  element("aspect-table").innerHTML = renderAspectTable(editor);
  element("opinion-table").innerHTML = renderOpinionTable(editor);
  element<HTMLButtonElement>("save-button").disabled = !editor.dirty;
  element("revision").textContent = `revision ${editor.revision}`;
}

function renderReportPane(): void {
  element("report-pane").innerHTML = renderReport(report);
  element("evidence-pane").innerHTML = renderEvidence(report);
}

async function refreshLexicons(): Promise<void> {
  editor.load(await client.lexicons());
  renderLexicons();
}

async function refreshStatus(): Promise<void> {
  const status = await client.status();
  setStatus(`${status.stage}: ${status.message}`);
}

async function runExtract(): Promise<void> {
  const dataset = element<HTMLInputElement>("dataset-path").value;
  const embeddings = element<HTMLInputElement>("embeddings-path").value;
  await client.extract(dataset, embeddings);
  setStatus("extracting lexicons…");
  await client.waitForStage("lexicons_ready");
  await refreshStatus();
  await refreshLexicons();
}

async function runClassify(): Promise<void> {
  const target = element<HTMLInputElement>("target-path").value;
  await client.classify(target);
  setStatus("classifying…");
  await client.waitForStage("report_ready");
  await refreshStatus();
  report.load(await client.report());
  renderReportPane();
}

async function save(): Promise<void> {
  try {
    const revision = await editor.commit(client);
    setStatus(`lexicons saved at revision ${revision}`);
  } catch (error) {
    if (error instanceof RevisionConflictError) {
      setStatus(`${error.message} — reloading`);
      await refreshLexicons();
      return;
    }
    setStatus(error instanceof ApiError ? `edit rejected: ${error.message}` : String(error));
    await refreshLexicons();
    return;
  }
  renderLexicons();
}

async function showExamples(term: string): Promise<void> {
  const payload = await client.examples(term, 10);
  element("examples-pane").innerHTML =
    `<h3>examples of "${term}"</h3>` + renderExamples(term, payload.examples);
}

function wireEvents(): void {
  element("extract-button").addEventListener("click", () => void runExtract());
  element("classify-button").addEventListener("click", () => void runClassify());
  element("save-button").addEventListener("click", () => void save());

  const lexiconPane = element("lexicon-pane");
  lexiconPane.addEventListener("change", (event) => {
    const target = event.target as HTMLElement;
    const term = target.dataset.term ?? "";
    if (target.classList.contains("enabled")) {
      const enabled = (target as HTMLInputElement).checked;
      if (target.dataset.kind === "aspect") editor.setAspectEnabled(term, enabled);
      else editor.setOpinionEnabled(term, enabled);
    } else if (target.classList.contains("alias")) {
      const slot = Number(target.dataset.slot) as 1 | 2 | 3;
      editor.setAlias(term, slot, (target as HTMLInputElement).value);
    } else if (target.classList.contains("polarity")) {
      editor.setPolarity(term, (target as HTMLSelectElement).value as Polarity);
    } else if (target.classList.contains("score")) {
      const score = Number((target as HTMLInputElement).value);
      if (Number.isFinite(score)) editor.setScore(term, score);
    }
    renderLexicons();
  });
  lexiconPane.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.classList.contains("delete")) {
      editor.deleteAspect(target.dataset.term ?? "");
      renderLexicons();
      return;
    }
    const row = target.closest<HTMLElement>("tr.aspect-row");
    if (row && !(target instanceof HTMLInputElement) && !(target instanceof HTMLButtonElement)) {
      void showExamples(row.dataset.term ?? "");
    }
  });

  element("add-aspect-button").addEventListener("click", () => {
    const input = element<HTMLInputElement>("add-aspect-term");
    editor.addAspect(input.value);
    input.value = "";
    renderLexicons();
  });

  element("report-pane").addEventListener("click", (event) => {
    const row = (event.target as HTMLElement).closest<HTMLElement>(".report-row");
    if (!row) return;
    void report.selectAspect(row.dataset.term ?? "", client).then(() => renderReportPane());
  });
}

async function start(): Promise<void> {
  wireEvents();
  await refreshStatus();
  const status = await client.status();
  if (status.stage === "lexicons_ready" || status.stage === "report_ready") {
    await refreshLexicons();
  }
  if (status.stage === "report_ready") {
    report.load(await client.report());
    renderReportPane();
  }
}

void start();
