import type { DiagramFile } from "../src/types.js";

/** Minimal one-crossing diagram: a horizontal and a vertical edge crossing
 * at the origin, the horizontal strand on top. */
export function xDiagram(withRule = true): DiagramFile {
  return {
    parts: [2, 2],
    positions: [
      ["-1", "0"],
      ["1", "0"],
      ["0", "-1"],
      ["0", "1"],
    ],
    edges: [
      { u: 0, v: 1, waypoints: [] },
      { u: 2, v: 3, waypoints: [] },
    ],
    over_rules: withRule ? [{ a: 0, sa: 0, b: 1, sb: 0, over: "a" }] : [],
  };
}

export function emptyDiagram(): DiagramFile {
  return { positions: [], edges: [], over_rules: [] };
}
