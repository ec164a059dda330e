/** SVG rendering of a diagram file: part-colored vertices, polyline edges,
 * and the standard knot-diagram convention of a gap in the under strand at
 * each crossing.  Crossings are recomputed from the drawing geometry so the
 * rendered gaps always match the stored over/under rules; rules with no
 * matching geometric crossing (or crossings with no rule, which default to
 * "a"-over) are surfaced as warnings. */

import {
  coordToNumber,
  type CrossingKey,
  type DiagramFile,
  type Point,
} from "./types.js";

export interface XY {
  x: number;
  y: number;
}

export interface RenderedCrossing {
  key: CrossingKey;
  point: XY;
  over: "a" | "b";
  /** True when the diagram file carries no rule for this crossing. */
  defaulted: boolean;
}

const PART_COLORS = [
  "#d81b60",
  "#1e88e5",
  "#43a047",
  "#fb8c00",
  "#8e24aa",
  "#00acc1",
  "#6d4c41",
  "#3949ab",
];

function toXY(p: Point): XY {
  return { x: coordToNumber(p[0]), y: coordToNumber(p[1]) };
}

/** Polyline corner points of one edge: endpoint, waypoints, endpoint. */
export function edgePolyline(d: DiagramFile, index: number): XY[] {
  const e = d.edges[index];
  return [
    toXY(d.positions[e.u]),
    ...e.waypoints.map(toXY),
    toXY(d.positions[e.v]),
  ];
}

function segmentIntersection(
  p1: XY,
  p2: XY,
  q1: XY,
  q2: XY,
): XY | null {
  const rx = p2.x - p1.x;
  const ry = p2.y - p1.y;
  const sx = q2.x - q1.x;
  const sy = q2.y - q1.y;
  const denom = rx * sy - ry * sx;
  if (denom === 0) return null;
  const t = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / denom;
  const u = ((q1.x - p1.x) * ry - (q1.y - p1.y) * rx) / denom;
  const eps = 1e-9;
  if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) return null;
  return { x: p1.x + t * rx, y: p1.y + t * ry };
}

/** Geometric crossings of the drawing, joined with the stored over rules. */
export function computeCrossings(d: DiagramFile): RenderedCrossing[] {
  const rules = new Map<string, "a" | "b">();
  for (const r of d.over_rules) {
    rules.set(`${r.a},${r.sa},${r.b},${r.sb}`, r.over);
  }
  const polylines = d.edges.map((_, i) => edgePolyline(d, i));
  const out: RenderedCrossing[] = [];
  for (let ea = 0; ea < d.edges.length; ea++) {
    for (let eb = ea + 1; eb < d.edges.length; eb++) {
      const shared = new Set(
        [d.edges[ea].u, d.edges[ea].v].filter((v) =>
          [d.edges[eb].u, d.edges[eb].v].includes(v),
        ),
      );
      const pa = polylines[ea];
      const pb = polylines[eb];
      for (let sa = 0; sa + 1 < pa.length; sa++) {
        for (let sb = 0; sb + 1 < pb.length; sb++) {
          const pt = segmentIntersection(pa[sa], pa[sa + 1], pb[sb], pb[sb + 1]);
          if (pt === null) continue;
          if (shared.size > 0) {
            // contact at a shared endpoint is not a crossing; interior
            // intersections between adjacent edges still are
            const near = [...shared].some((v) => {
              const vp = toXY(d.positions[v]);
              return Math.hypot(vp.x - pt.x, vp.y - pt.y) < 1e-9;
            });
            if (near) continue;
          }
          const key: CrossingKey = [ea, sa, eb, sb];
          const rule = rules.get(`${ea},${sa},${eb},${sb}`);
          out.push({
            key,
            point: pt,
            over: rule ?? "a",
            defaulted: rule === undefined,
          });
        }
      }
    }
  }
  return out;
}

function partOfVertex(d: DiagramFile, v: number): number {
  const parts = d.parts ?? (d.meta?.parts as number[] | undefined);
  if (!parts) return 0;
  let acc = 0;
  for (let i = 0; i < parts.length; i++) {
    acc += parts[i];
    if (v < acc) return i;
  }
  return 0;
}

export interface RenderOptions {
  width?: number;
  height?: number;
  margin?: number;
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Render the diagram as an SVG document string.  A null diagram or an
 * empty graph renders an empty canvas. */
export function renderSvg(
  d: DiagramFile | null,
  opts: RenderOptions = {},
): string {
  const width = opts.width ?? 800;
  const height = opts.height ?? 600;
  const margin = opts.margin ?? 40;
  const open = `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`;
  if (d === null || d.positions.length === 0) {
    return `${open}</svg>`;
  }

  const pts = d.positions.map(toXY);
  const all = [
    ...pts,
    ...d.edges.flatMap((e) => e.waypoints.map(toXY)),
  ];
  const minX = Math.min(...all.map((p) => p.x));
  const maxX = Math.max(...all.map((p) => p.x));
  const minY = Math.min(...all.map((p) => p.y));
  const maxY = Math.max(...all.map((p) => p.y));
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min(
    (width - 2 * margin) / spanX,
    (height - 2 * margin) / spanY,
  );
  const tx = (p: XY): XY => ({
    x: margin + (p.x - minX) * scale,
    // flip y so the mathematical orientation matches the screen
    y: height - margin - (p.y - minY) * scale,
  });

  const parts: string[] = [open];
  // edges first
  for (let i = 0; i < d.edges.length; i++) {
    const pointsAttr = edgePolyline(d, i)
      .map(tx)
      .map((p) => `${p.x.toFixed(2)},${p.y.toFixed(2)}`)
      .join(" ");
    parts.push(
      `<polyline class="edge" data-edge="${i}" points="${pointsAttr}" ` +
        `fill="none" stroke="#333" stroke-width="2"/>`,
    );
  }
  // crossings: white casing disc, then the over strand's local chord on top
  const crossings = computeCrossings(d);
  const gap = 7;
  for (const c of crossings) {
    const p = tx(c.point);
    const [ea, sa, eb, sb] = c.key;
    const [edge, seg] = c.over === "a" ? [ea, sa] : [eb, sb];
    const line = edgePolyline(d, edge);
    const s1 = tx(line[seg]);
    const s2 = tx(line[seg + 1]);
    const len = Math.hypot(s2.x - s1.x, s2.y - s1.y) || 1;
    const ux = (s2.x - s1.x) / len;
    const uy = (s2.y - s1.y) / len;
    parts.push(
      `<circle class="gap" cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" ` +
        `r="${gap}" fill="#fff"/>`,
    );
    parts.push(
      `<line class="over-strand" data-key="${c.key.join(",")}" ` +
        `x1="${(p.x - ux * gap).toFixed(2)}" y1="${(p.y - uy * gap).toFixed(2)}" ` +
        `x2="${(p.x + ux * gap).toFixed(2)}" y2="${(p.y + uy * gap).toFixed(2)}" ` +
        `stroke="#333" stroke-width="2"/>`,
    );
    // invisible click target with a generous hit radius
    parts.push(
      `<circle class="crossing-hit" data-key="${c.key.join(",")}" ` +
        `cx="${p.x.toFixed(2)}" cy="${p.y.toFixed(2)}" r="12" ` +
        `fill="transparent" style="cursor:pointer"/>`,
    );
  }
  // vertices on top, colored by part
  for (let v = 0; v < pts.length; v++) {
    const p = tx(pts[v]);
    const color = PART_COLORS[partOfVertex(d, v) % PART_COLORS.length];
    parts.push(
      `<circle class="vertex" data-vertex="${v}" cx="${p.x.toFixed(2)}" ` +
        `cy="${p.y.toFixed(2)}" r="6" fill="${color}" stroke="#000"/>`,
    );
    parts.push(
      `<text x="${(p.x + 8).toFixed(2)}" y="${(p.y - 8).toFixed(2)}" ` +
        `font-size="11">${v}</text>`,
    );
  }
  if (crossings.some((c) => c.defaulted)) {
    parts.push(
      `<text class="warning-badge" x="${margin}" y="${height - 10}" ` +
        `fill="#b26a00" font-size="12">${esc(
          "⚠ some crossings have no stored rule and render with the default over strand",
        )}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
