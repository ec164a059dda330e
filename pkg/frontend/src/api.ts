/** Thin typed client for the linknot HTTP service.  The fetch function is
 * injectable so tests can run against a mock transport. */

import type {
  CensusReport,
  CrossingKey,
  FlipResponse,
  SearchResponse,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function raise(resp: Response): Promise<never> {
  let detail = resp.statusText;
  try {
    const body = (await resp.json()) as { detail?: string };
    if (body.detail) detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(resp.status, detail);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const resp = await this.fetchFn(this.baseUrl + path, init);
    if (!resp.ok) await raise(resp);
    return resp;
  }

  /** Raw canonical diagram bytes — kept verbatim for round-trip fidelity. */
  async getDiagramText(): Promise<string> {
    return (await this.request("/diagram")).text();
  }

  async putDiagram(text: string): Promise<void> {
    await this.request("/diagram", {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: text,
    });
  }

  async flip(key: CrossingKey): Promise<FlipResponse> {
    const resp = await this.request("/flip", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ key }),
    });
    return (await resp.json()) as FlipResponse;
  }

  async moveVertex(id: number, x: string, y: string): Promise<void> {
    await this.request("/move-vertex", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ id, x, y }),
    });
  }

  /** Census as both verbatim bytes (CLI-identical) and a parsed report. */
  async census(
    kind: "links" | "knots" | "both" = "both",
  ): Promise<{ text: string; report: CensusReport }> {
    const resp = await this.request(`/census?kind=${kind}`);
    const text = await resp.text();
    return { text, report: JSON.parse(text) as CensusReport };
  }

  async search(body: {
    objective?: string;
    budget?: number;
    seed?: number;
  }): Promise<SearchResponse> {
    const resp = await this.request("/search", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return (await resp.json()) as SearchResponse;
  }
}
