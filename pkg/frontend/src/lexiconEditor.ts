/** Staged-edit model for the lexicon editor.
 *
 * Edits are staged locally against a snapshot of the server lexicons and
 * committed in staging order through the edit endpoint on explicit save.
 * Re-editing a field back to its loaded value unstages the edit. The model's
 * revision is only ever set from server responses, so the view revision never
 * runs ahead of the server; a save against a stale revision is rejected
 * before any edit is sent (the UI then prompts for a reload).
 */

import type { ApiClient } from "./api.js";
import type { EditRequest, LexiconsResponse, Polarity } from "./types.js";

export interface AspectRowVM {
  term: string;
  aliases: [string, string, string];
  enabled: boolean;
  frequency: number;
}

export interface OpinionRowVM {
  term: string;
  polarity: Polarity;
  score: number;
  enabled: boolean;
}

interface AspectOriginal {
  aliases: [string, string, string];
  enabled: boolean;
}

interface OpinionOriginal {
  polarity: Polarity;
  score: number;
  enabled: boolean;
}

export class RevisionConflictError extends Error {
  constructor(
    readonly viewRevision: number,
    readonly serverRevision: number,
  ) {
    super(
      `server lexicons moved from revision ${viewRevision} to ${serverRevision}; ` +
        "reload before saving",
    );
  }
}

function aliasSlots(aliases: string[]): [string, string, string] {
  return [aliases[0] ?? "", aliases[1] ?? "", aliases[2] ?? ""];
}

export class LexiconEditorModel {
  revision = 0;
  aspects: AspectRowVM[] = [];
  opinions: OpinionRowVM[] = [];
  private aspectOriginals = new Map<string, AspectOriginal>();
  private opinionOriginals = new Map<string, OpinionOriginal>();
  private staged = new Map<string, EditRequest>();

  static fromResponse(response: LexiconsResponse): LexiconEditorModel {
    const model = new LexiconEditorModel();
    model.load(response);
    return model;
  }

  /** Replace all local state with a fresh server snapshot. */
  load(response: LexiconsResponse): void {
    this.revision = response.revision;
    this.aspects = response.aspects.map((a) => ({
      term: a.term,
      aliases: aliasSlots(a.aliases),
      enabled: a.enabled,
      frequency: a.frequency,
    }));
    this.opinions = response.opinions.map((o) => ({
      term: o.term,
      polarity: o.polarity,
      score: o.score,
      enabled: o.enabled,
    }));
    this.aspectOriginals = new Map(
      this.aspects.map((a) => [a.term, { aliases: [...a.aliases] as [string, string, string], enabled: a.enabled }]),
    );
    this.opinionOriginals = new Map(
      this.opinions.map((o) => [o.term, { polarity: o.polarity, score: o.score, enabled: o.enabled }]),
    );
    this.staged.clear();
  }

  get dirty(): boolean {
    return this.staged.size > 0;
  }

  isDirty(kind: "aspect" | "opinion", term: string): boolean {
    const prefix = `${kind}:${term}:`;
    for (const key of this.staged.keys()) {
      if (key.startsWith(prefix)) return true;
    }
    return false;
  }

  stagedEdits(): EditRequest[] {
    return [...this.staged.values()];
  }

  /** Keep first-staged order with the latest value; drop no-ops.
   * Map.set on an existing key preserves its insertion position. */
  private stage(key: string, edit: EditRequest | null): void {
    if (edit === null) {
      this.staged.delete(key);
    } else {
      this.staged.set(key, edit);
    }
  }

  aspect(term: string): AspectRowVM | undefined {
    return this.aspects.find((a) => a.term === term);
  }

  opinion(term: string): OpinionRowVM | undefined {
    return this.opinions.find((o) => o.term === term);
  }

  setAspectEnabled(term: string, enabled: boolean): void {
    const row = this.aspect(term);
    if (!row) return;
    row.enabled = enabled;
    const original = this.aspectOriginals.get(term);
    const isNoop = original !== undefined && original.enabled === enabled;
    this.stage(
      `aspect:${term}:enabled`,
      isNoop ? null : { action: "set_enabled", term, kind: "aspect", enabled },
    );
  }

  setOpinionEnabled(term: string, enabled: boolean): void {
    const row = this.opinion(term);
    if (!row) return;
    row.enabled = enabled;
    const original = this.opinionOriginals.get(term);
    const isNoop = original !== undefined && original.enabled === enabled;
    this.stage(
      `opinion:${term}:enabled`,
      isNoop ? null : { action: "set_enabled", term, kind: "opinion", enabled },
    );
  }

  setAlias(term: string, slot: 1 | 2 | 3, alias: string): void {
    const row = this.aspect(term);
    if (!row) return;
    const clean = alias.trim().toLowerCase();
    row.aliases[slot - 1] = clean;
    const original = this.aspectOriginals.get(term);
    const isNoop = original !== undefined && original.aliases[slot - 1] === clean;
    this.stage(
      `aspect:${term}:alias${slot}`,
      isNoop ? null : { action: "set_alias", term, slot, alias: clean },
    );
  }

  setPolarity(term: string, polarity: Polarity): void {
    const row = this.opinion(term);
    if (!row) return;
    row.polarity = polarity;
    const original = this.opinionOriginals.get(term);
    const isNoop = original !== undefined && original.polarity === polarity;
    this.stage(
      `opinion:${term}:polarity`,
      isNoop ? null : { action: "set_polarity", term, polarity },
    );
  }

  setScore(term: string, score: number): void {
    const row = this.opinion(term);
    if (!row) return;
    row.score = score;
    const original = this.opinionOriginals.get(term);
    const isNoop = original !== undefined && original.score === score;
    this.stage(
      `opinion:${term}:score`,
      isNoop ? null : { action: "set_score", term, score },
    );
  }

  addAspect(term: string): void {
    const clean = term.trim().toLowerCase();
    if (!clean || this.aspect(clean)) return;
    this.aspects.push({ term: clean, aliases: ["", "", ""], enabled: true, frequency: 0 });
    this.stage(`aspect:${clean}:add`, { action: "add_aspect", term: clean });
  }

  deleteAspect(term: string): void {
    const index = this.aspects.findIndex((a) => a.term === term);
    if (index < 0) return;
    this.aspects.splice(index, 1);
    if (this.staged.has(`aspect:${term}:add`)) {
      // deleting a row that only exists locally cancels its pending add
      for (const key of [...this.staged.keys()]) {
        if (key.startsWith(`aspect:${term}:`)) this.staged.delete(key);
      }
      return;
    }
    this.stage(`aspect:${term}:delete`, { action: "delete_aspect", term });
  }

  /** Commit staged edits in order after an optimistic revision check.
   * Returns the new server revision (also stored on the model). */
  async commit(client: ApiClient): Promise<number> {
    const status = await client.status();
    if (status.lexicon_revision !== this.revision) {
      throw new RevisionConflictError(this.revision, status.lexicon_revision);
    }
    let revision = this.revision;
    for (const edit of this.stagedEdits()) {
      const response = await client.edit(edit);
      revision = response.revision;
    }
    this.revision = revision;
    this.staged.clear();
    this.aspectOriginals = new Map(
      this.aspects.map((a) => [a.term, { aliases: [...a.aliases] as [string, string, string], enabled: a.enabled }]),
    );
    this.opinionOriginals = new Map(
      this.opinions.map((o) => [o.term, { polarity: o.polarity, score: o.score, enabled: o.enabled }]),
    );
    return revision;
  }
}
