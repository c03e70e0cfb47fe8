/** Wire types for the aspectminer HTTP API. */

export type Polarity = "POS" | "NEG";

export interface StatusResponse {
  job_id: string | null;
  stage: string;
  message: string;
  lexicon_revision: number;
}

export interface JobResponse {
  job_id: string;
  stage: string;
}

export interface AspectRow {
  term: string;
  aliases: string[];
  enabled: boolean;
  frequency: number;
}

export interface OpinionRow {
  term: string;
  polarity: Polarity;
  score: number;
  enabled: boolean;
}

export interface LexiconsResponse {
  revision: number;
  domain_label: string;
  aspects: AspectRow[];
  opinions: OpinionRow[];
}

export interface EditRequest {
  action:
    | "set_enabled"
    | "add_aspect"
    | "delete_aspect"
    | "set_alias"
    | "add_opinion"
    | "set_polarity"
    | "set_score";
  term: string;
  kind?: "aspect" | "opinion";
  enabled?: boolean;
  slot?: number;
  alias?: string;
  polarity?: Polarity;
  score?: number;
}

export interface EditResponse {
  revision: number;
}

export interface ExampleRow {
  sentence_text: string;
  span: [number, number];
}

export interface ExamplesResponse {
  term: string;
  lexicon_revision: number;
  examples: ExampleRow[];
}

export interface ReportRow {
  aspect_term: string;
  positive_count: number;
  negative_count: number;
}

export interface ReportResponse {
  lexicon_revision: number;
  rows: ReportRow[];
}

export interface EvidenceRow {
  sentence_text: string;
  aspect_span: [number, number];
  opinion_span: [number, number];
  polarity: Polarity;
}

export interface EvidenceResponse {
  aspect_term: string;
  lexicon_revision: number;
  rows: EvidenceRow[];
}
