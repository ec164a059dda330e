import { describe, expect, it } from "vitest";

import { computeCrossings, edgePolyline, renderSvg } from "../src/render.js";
import { emptyDiagram, xDiagram } from "./fixtures.js";

describe("computeCrossings", () => {
  it("finds the single crossing of the X fixture", () => {
    const crossings = computeCrossings(xDiagram());
    expect(crossings).toHaveLength(1);
    expect(crossings[0].key).toEqual([0, 0, 1, 0]);
    expect(crossings[0].point.x).toBeCloseTo(0);
    expect(crossings[0].point.y).toBeCloseTo(0);
    expect(crossings[0].over).toBe("a");
    expect(crossings[0].defaulted).toBe(false);
  });

  it("defaults missing rules to the first strand and flags them", () => {
    const crossings = computeCrossings(xDiagram(false));
    expect(crossings).toHaveLength(1);
    expect(crossings[0].over).toBe("a");
    expect(crossings[0].defaulted).toBe(true);
  });

  it("ignores contacts at shared vertices", () => {
    const d = xDiagram();
    // a third edge sharing vertex 0 with edge 0
    d.edges.push({ u: 0, v: 3, waypoints: [] });
    const crossings = computeCrossings(d);
    expect(crossings).toHaveLength(1);
  });

  it("expands waypoints into polyline corners", () => {
    const d = xDiagram();
    d.edges[0].waypoints = [["0", "2"]];
    expect(edgePolyline(d, 0)).toEqual([
      { x: -1, y: 0 },
      { x: 0, y: 2 },
      { x: 1, y: 0 },
    ]);
  });
});

describe("renderSvg", () => {
  it("renders an empty canvas for null or empty diagrams", () => {
    for (const svg of [renderSvg(null), renderSvg(emptyDiagram())]) {
      expect(svg).toContain("<svg");
      expect(svg).not.toContain("circle");
    }
  });

  it("renders vertices, edges and a crossing gap for the X fixture", () => {
    const svg = renderSvg(xDiagram());
    expect(svg.match(/class="vertex"/g)).toHaveLength(4);
    expect(svg.match(/class="edge"/g)).toHaveLength(2);
    expect(svg.match(/class="gap"/g)).toHaveLength(1);
    expect(svg).toContain('class="over-strand" data-key="0,0,1,0"');
    expect(svg).toContain('class="crossing-hit" data-key="0,0,1,0"');
    expect(svg).not.toContain("warning-badge");
  });

  it("color-codes vertices by part membership", () => {
    const svg = renderSvg(xDiagram());
    const fills = [...svg.matchAll(/class="vertex"[^/]*fill="(#\w+)"/g)].map(
      (m) => m[1],
    );
    expect(fills).toHaveLength(4);
    expect(fills[0]).toBe(fills[1]);
    expect(fills[2]).toBe(fills[3]);
    expect(fills[0]).not.toBe(fills[2]);
  });

  it("shows a default-over warning badge when a rule is missing", () => {
    const svg = renderSvg(xDiagram(false));
    expect(svg).toContain("warning-badge");
    expect(svg).toContain("default over strand");
  });
});
