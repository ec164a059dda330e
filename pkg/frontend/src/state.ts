/** Editor session state: one diagram mirrored from the service, an undo
 * stack of diagram files, and the last census.  All mutations go through the
 * service; a rejected mutation leaves the state exactly as it was (snap
 * back) with the violation recorded for display. */

import { ApiClient, ApiError } from "./api.js";
import type { CensusReport, CrossingKey, DiagramFile } from "./types.js";

export type Selection =
  | { kind: "vertex"; id: number }
  | { kind: "crossing"; key: CrossingKey }
  | { kind: "edge"; index: number }
  | null;

export function validateDiagramFile(obj: unknown): string | null {
  if (typeof obj !== "object" || obj === null) return "not a JSON object";
  const d = obj as Partial<DiagramFile>;
  if (!Array.isArray(d.positions)) return "missing positions";
  if (!Array.isArray(d.edges)) return "missing edges";
  if (!Array.isArray(d.over_rules)) return "missing over_rules";
  for (const e of d.edges) {
    if (typeof e.u !== "number" || typeof e.v !== "number") {
      return "edge endpoints must be vertex indices";
    }
    if (e.u < 0 || e.u >= d.positions.length || e.v < 0 || e.v >= d.positions.length) {
      return `edge (${e.u},${e.v}) references a missing vertex`;
    }
  }
  return null;
}

export class EditorSession {
  /** Canonical diagram bytes as served — downloads return these verbatim. */
  private text: string | null = null;
  private undoStack: string[] = [];

  diagram: DiagramFile | null = null;
  censusText: string | null = null;
  census: CensusReport | null = null;
  /** True between a successful mutation and the next census refresh. */
  censusStale = false;
  pending = false;
  selection: Selection = null;
  error: string | null = null;

  constructor(private readonly api: ApiClient) {}

  get canUndo(): boolean {
    return this.undoStack.length > 0;
  }

  /** Current diagram bytes for download; null when nothing is loaded. */
  downloadText(): string | null {
    return this.text;
  }

  private setDiagramText(text: string): void {
    this.text = text;
    this.diagram = JSON.parse(text) as DiagramFile;
  }

  private async syncFromService(): Promise<void> {
    this.setDiagramText(await this.api.getDiagramText());
  }

  /** Load a diagram file into the session.  Schema violations are reported
   * without touching the current render; service validation errors likewise
   * snap back. */
  async load(fileText: string): Promise<boolean> {
    let parsed: unknown;
    try {
      parsed = JSON.parse(fileText);
    } catch (e) {
      this.error = `not valid JSON: ${(e as Error).message}`;
      return false;
    }
    const problem = validateDiagramFile(parsed);
    if (problem !== null) {
      this.error = `diagram schema violation: ${problem}`;
      return false;
    }
    return this.mutate(async () => {
      await this.api.putDiagram(fileText);
      this.undoStack = [];
    });
  }

  async flipCrossing(key: CrossingKey): Promise<boolean> {
    return this.mutate(async () => {
      await this.api.flip(key);
    }, true);
  }

  async moveVertex(id: number, x: string, y: string): Promise<boolean> {
    return this.mutate(async () => {
      await this.api.moveVertex(id, x, y);
    }, true);
  }

  async undo(): Promise<boolean> {
    const prev = this.undoStack.pop();
    if (prev === undefined) return false;
    try {
      this.pending = true;
      await this.api.putDiagram(prev);
      await this.syncFromService();
      this.censusStale = true;
      this.error = null;
      return true;
    } catch (e) {
      this.error = describeFailure(e);
      return false;
    } finally {
      this.pending = false;
    }
  }

  async refreshCensus(
    kind: "links" | "knots" | "both" = "both",
  ): Promise<boolean> {
    try {
      const { text, report } = await this.api.census(kind);
      this.censusText = text;
      this.census = report;
      this.censusStale = false;
      return true;
    } catch (e) {
      this.error = describeFailure(e);
      return false;
    }
  }

  private async mutate(
    action: () => Promise<void>,
    pushUndo = false,
  ): Promise<boolean> {
    if (this.pending) {
      this.error = "another request is in flight";
      return false;
    }
    this.pending = true;
    try {
      await action();
      if (pushUndo && this.text !== null) this.undoStack.push(this.text);
      await this.syncFromService();
      this.censusStale = true;
      this.error = null;
      return true;
    } catch (e) {
      // snap back: state was never modified, just surface the violation
      this.error = describeFailure(e);
      return false;
    } finally {
      this.pending = false;
    }
  }
}

function describeFailure(e: unknown): string {
  if (e instanceof ApiError) {
    if (e.status === 422) return `rejected: ${e.detail}`;
    if (e.status === 404) return `not found: ${e.detail}`;
    return e.message;
  }
  return `network failure: ${(e as Error).message ?? e}`;
}
