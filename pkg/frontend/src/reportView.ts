/** View model for the per-aspect sentiment report.
 *
 * Bar lengths and tooltip counts come straight from the /report payload; no
 * client-side re-aggregation happens, so the rendered numbers always equal
 * the server's.
 */

import type { ApiClient } from "./api.js";
import type { EvidenceRow, ReportResponse, ReportRow } from "./types.js";

export interface BarGeometry {
  positivePct: number;
  negativePct: number;
}

export class ReportViewModel {
  revision = 0;
  rows: ReportRow[] = [];
  selectedAspect: string | null = null;
  evidence: EvidenceRow[] = [];

  static fromResponse(response: ReportResponse): ReportViewModel {
    const model = new ReportViewModel();
    model.load(response);
    return model;
  }

  load(response: ReportResponse): void {
    this.revision = response.lexicon_revision;
    this.rows = response.rows;
    this.selectedAspect = null;
    this.evidence = [];
  }

  get maxTotal(): number {
    return this.rows.reduce(
      (max, row) => Math.max(max, row.positive_count + row.negative_count),
      0,
    );
  }

  /** Bar segment widths as percentages of the widest row. */
  geometry(row: ReportRow): BarGeometry {
    const max = this.maxTotal;
    if (max === 0) return { positivePct: 0, negativePct: 0 };
    return {
      positivePct: (100 * row.positive_count) / max,
      negativePct: (100 * row.negative_count) / max,
    };
  }

  tooltip(row: ReportRow, polarity: "POS" | "NEG"): string {
    const count = polarity === "POS" ? row.positive_count : row.negative_count;
    const label = polarity === "POS" ? "positive" : "negative";
    return `${count} ${label} mention${count === 1 ? "" : "s"} towards "${row.aspect_term}"`;
  }

  /** Bar click: fetch and hold the evidence sentences for one aspect. */
  async selectAspect(term: string, client: ApiClient): Promise<EvidenceRow[]> {
    const response = await client.evidence(term);
    this.selectedAspect = term;
    this.evidence = response.rows;
    return this.evidence;
  }
}
