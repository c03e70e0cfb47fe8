/** Thin typed client over the service endpoints; the server is the single
 * source of truth and this module is the only place that talks to it. */

import type {
  EditRequest,
  EditResponse,
  EvidenceResponse,
  ExamplesResponse,
  JobResponse,
  LexiconsResponse,
  ReportResponse,
  StatusResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, body?: unknown): Promise<T> {
    const init: RequestInit =
      body === undefined
        ? { method: "GET" }
        : {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
          };
    const response = await this.fetchFn(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const payload = (await response.json()) as { detail?: string };
        if (payload.detail) detail = payload.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(detail, response.status);
    }
    return (await response.json()) as T;
  }

  status(): Promise<StatusResponse> {
    return this.request("/status");
  }

  extract(datasetPath: string, embeddingsPath: string): Promise<JobResponse> {
    return this.request("/extract", {
      dataset_path: datasetPath,
      embeddings_path: embeddingsPath,
    });
  }

  lexicons(): Promise<LexiconsResponse> {
    return this.request("/lexicons");
  }

  edit(edit: EditRequest): Promise<EditResponse> {
    return this.request("/lexicons/edit", edit);
  }

  examples(term: string, limit = 10): Promise<ExamplesResponse> {
    const query = new URLSearchParams({ term, limit: String(limit) });
    return this.request(`/examples?${query}`);
  }

  classify(targetPath: string): Promise<JobResponse> {
    return this.request("/classify", { target_dataset_path: targetPath });
  }

  report(): Promise<ReportResponse> {
    return this.request("/report");
  }

  evidence(aspectTerm: string): Promise<EvidenceResponse> {
    const query = new URLSearchParams({ aspect_term: aspectTerm });
    return this.request(`/evidence?${query}`);
  }

  /** Poll /status until the given stage; rejects if the job fails first. */
  async waitForStage(stage: string, timeoutMs = 60_000, pollMs = 150): Promise<StatusResponse> {
    const deadline = Date.now() + timeoutMs;
    for (;;) {
      const status = await this.status();
      if (status.stage === stage) return status;
      if (status.stage === "failed") {
        throw new ApiError(status.message, 500);
      }
      if (Date.now() > deadline) {
        throw new ApiError(`timed out waiting for stage ${stage} (at ${status.stage})`, 504);
      }
      await new Promise((resolve) => setTimeout(resolve, pollMs));
    }
  }
}
