/** Census panel: totals, shape breakdown, bound badges and the detection
 * caveat, derived as a plain view model so it can be tested without a DOM. */

import type { BoundEntry, BreakdownRow, CensusReport } from "./types.js";

export interface Badge {
  status: "no-bound" | "meets" | "above" | "violated";
  label: string;
}

export interface PanelModel {
  title: string;
  rows: string[];
  badges: Badge[];
  caveats: string[];
  notes: string[];
  stale: boolean;
}

function badgeFor(kind: "links" | "knots", entry: BoundEntry, total: number): Badge {
  switch (entry.status) {
    case "meets":
      return {
        status: "meets",
        label: `${total} ${kind} — meets known minimum ${entry.lower_bound}`,
      };
    case "above":
      return {
        status: "above",
        label: `${total} ${kind} — ≥ ${entry.lower_bound} bound satisfied`,
      };
    case "violated":
      return {
        status: "violated",
        label: `${total} ${kind} — BELOW the proven bound ${entry.lower_bound} (bug!)`,
      };
    default:
      return { status: "no-bound", label: `${total} ${kind} — no proven bound` };
  }
}

function describeRow(kind: "links" | "knots", row: BreakdownRow): string {
  if (kind === "links" && row.shape) {
    return `(${row.shape[0]},${row.shape[1]})-links, ${row.parity}: ${row.count}`;
  }
  return `knotted ${row.length}-cycles: ${row.count}`;
}

export function panelModel(
  report: CensusReport | null,
  stale = false,
): PanelModel {
  if (report === null) {
    return {
      title: "no census yet",
      rows: [],
      badges: [],
      caveats: [],
      notes: [],
      stale,
    };
  }
  const rows: string[] = [];
  const badges: Badge[] = [];
  const totals: string[] = [];
  for (const kind of ["links", "knots"] as const) {
    const section = report[kind];
    if (!section) continue;
    totals.push(`${section.total} ${kind}`);
    for (const row of section.breakdown) rows.push(describeRow(kind, row));
    const bound = report.bounds[kind];
    if (bound) badges.push(badgeFor(kind, bound, section.total));
  }
  return {
    title: totals.join(", ") || "empty census",
    rows,
    badges,
    caveats: report.caveats,
    notes: report.notes,
    stale,
  };
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderPanelHtml(model: PanelModel): string {
  const parts = [`<div class="census-panel${model.stale ? " stale" : ""}">`];
  parts.push(`<h2>${esc(model.title)}${model.stale ? " (refreshing…)" : ""}</h2>`);
  if (model.rows.length > 0) {
    parts.push("<ul>");
    for (const row of model.rows) parts.push(`<li>${esc(row)}</li>`);
    parts.push("</ul>");
  }
  for (const badge of model.badges) {
    parts.push(
      `<span class="badge badge-${badge.status}">${esc(badge.label)}</span>`,
    );
  }
  for (const caveat of model.caveats) {
    parts.push(`<p class="caveat">${esc(caveat)}</p>`);
  }
  for (const note of model.notes) {
    parts.push(`<p class="note">${esc(note)}</p>`);
  }
  parts.push("</div>");
  return parts.join("\n");
}
