/** Shared wire types mirroring the diagram-file and census JSON schemas
 * served by the linknot backend.  Coordinates are exact rationals encoded
 * as strings ("10", "-0.5", "2/7"). */

export type Coord = string;
export type Point = [Coord, Coord];

export interface EdgeSpec {
  u: number;
  v: number;
  waypoints: Point[];
}

export interface OverRule {
  a: number; // lower edge index of the key
  sa: number; // segment index within edge a
  b: number;
  sb: number;
  over: "a" | "b";
}

/** Crossing identity: (edgeA, segA, edgeB, segB) with edgeA < edgeB. */
export type CrossingKey = [number, number, number, number];

export interface DiagramFile {
  parts?: number[];
  positions: Point[];
  edges: EdgeSpec[];
  over_rules: OverRule[];
  meta?: Record<string, unknown>;
}

export interface BreakdownRow {
  count: number;
  parity?: string; // link rows: "odd" | "even"
  shape?: [number, number]; // link rows: cycle lengths (m, n)
  length?: number; // knot rows: cycle length
}

export type BoundStatus = "no-bound" | "meets" | "above" | "violated";

export interface BoundEntry {
  lower_bound: number | null;
  status: BoundStatus;
}

export interface CensusReport {
  parts: number[] | null;
  kind: "links" | "knots" | "both";
  links?: { total: number; breakdown: BreakdownRow[] };
  knots?: { total: number; breakdown: BreakdownRow[] };
  bounds: Partial<Record<"links" | "knots", BoundEntry>>;
  caveats: string[];
  notes: string[];
}

export interface FlipResponse {
  ok: boolean;
  key: number[];
  over: "a" | "b";
}

export interface SearchResponse {
  ok: boolean;
  objective: string;
  best_count: number;
  seed: number;
  trace: Array<Record<string, unknown>>;
}

/** Parse an exact rational coordinate to a float for rendering. */
export function coordToNumber(c: Coord): number {
  const slash = c.indexOf("/");
  if (slash >= 0) {
    return Number(c.slice(0, slash)) / Number(c.slice(slash + 1));
  }
  return Number(c);
}
