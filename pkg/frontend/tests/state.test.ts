import { describe, expect, it } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import { EditorSession, validateDiagramFile } from "../src/state.js";
import type { DiagramFile } from "../src/types.js";
import { xDiagram } from "./fixtures.js";

/** In-memory stand-in for the backend: canonicalizes stored diagrams (so
 * GET-after-PUT returns different bytes than the upload, as the real
 * service does) and serves flips, moves and a fake census. */
function mockService() {
  let diagram: DiagramFile | null = null;
  let censusVersion = 0;

  const canonical = (): string => JSON.stringify(diagram, null, 2) + "\n";
  const json = (status: number, body: unknown): Response =>
    new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    });

  const fetchFn: FetchLike = async (url, init) => {
    const path = url.replace(/^[a-z]+:\/\/[^/]+/, "");
    const body = init?.body ? JSON.parse(init.body as string) : null;
    if (path === "/diagram" && (!init || init.method === undefined)) {
      if (diagram === null) return json(404, { detail: "no diagram loaded" });
      return new Response(canonical(), { status: 200 });
    }
    if (path === "/diagram" && init?.method === "PUT") {
      if (!Array.isArray(body?.positions)) {
        return json(422, { detail: "bad diagram" });
      }
      diagram = body as DiagramFile;
      censusVersion++;
      return json(200, { ok: true });
    }
    if (path === "/flip" && init?.method === "POST") {
      const key = body.key as number[];
      const rule = diagram?.over_rules.find(
        (r) => r.a === key[0] && r.sa === key[1] && r.b === key[2] && r.sb === key[3],
      );
      if (!rule) return json(404, { detail: `unknown crossing ${key}` });
      rule.over = rule.over === "a" ? "b" : "a";
      censusVersion++;
      return json(200, { ok: true, key, over: rule.over });
    }
    if (path === "/move-vertex" && init?.method === "POST") {
      if (body.x === "0" && body.y === "0") {
        return json(422, { detail: "coincident vertex positions" });
      }
      diagram!.positions[body.id] = [body.x, body.y];
      censusVersion++;
      return json(200, { ok: true });
    }
    if (path.startsWith("/census")) {
      return new Response(
        JSON.stringify({
          parts: diagram?.parts ?? null,
          kind: "links",
          links: { total: censusVersion, breakdown: [] },
          bounds: { links: { lower_bound: null, status: "no-bound" } },
          caveats: [],
          notes: [],
        }) + "\n",
        { status: 200 },
      );
    }
    return json(404, { detail: `no route ${path}` });
  };
  return { fetchFn, canonical };
}

function makeSession() {
  const svc = mockService();
  return { session: new EditorSession(new ApiClient("", svc.fetchFn)), svc };
}

describe("validateDiagramFile", () => {
  it("accepts the fixture and rejects structural problems", () => {
    expect(validateDiagramFile(xDiagram())).toBeNull();
    expect(validateDiagramFile(null)).toMatch(/object/);
    expect(validateDiagramFile({ edges: [], over_rules: [] })).toMatch(
      /positions/,
    );
    const dangling = xDiagram();
    dangling.edges.push({ u: 0, v: 99, waypoints: [] });
    expect(validateDiagramFile(dangling)).toMatch(/missing vertex/);
  });
});

describe("EditorSession", () => {
  it("rejects malformed uploads without touching the render state", async () => {
    const { session } = makeSession();
    expect(await session.load("{ not json")).toBe(false);
    expect(session.error).toMatch(/not valid JSON/);
    expect(await session.load(JSON.stringify({ positions: [] }))).toBe(false);
    expect(session.error).toMatch(/schema violation/);
    expect(session.diagram).toBeNull();
    expect(session.downloadText()).toBeNull();
  });

  it("mirrors the service's canonical bytes after a load", async () => {
    const { session, svc } = makeSession();
    const upload = JSON.stringify(xDiagram()); // compact, non-canonical
    expect(await session.load(upload)).toBe(true);
    expect(session.downloadText()).toBe(svc.canonical());
    expect(session.downloadText()).not.toBe(upload);
    expect(session.censusStale).toBe(true);
    await session.refreshCensus();
    expect(session.censusStale).toBe(false);
    expect(session.census?.links?.total).toBe(1);
  });

  it("round-trips: reloading a download leaves the bytes identical", async () => {
    const { session } = makeSession();
    await session.load(JSON.stringify(xDiagram()));
    const saved = session.downloadText()!;
    expect(await session.load(saved)).toBe(true);
    expect(session.downloadText()).toBe(saved);
  });

  it("flips update the diagram and undo restores it byte-for-byte", async () => {
    const { session } = makeSession();
    await session.load(JSON.stringify(xDiagram()));
    const before = session.downloadText()!;
    expect(await session.flipCrossing([0, 0, 1, 0])).toBe(true);
    expect(session.canUndo).toBe(true);
    expect(session.downloadText()).not.toBe(before);
    expect(session.diagram?.over_rules[0].over).toBe("b");
    expect(session.censusStale).toBe(true);
    expect(await session.undo()).toBe(true);
    expect(session.downloadText()).toBe(before);
    expect(session.canUndo).toBe(false);
  });

  it("snaps back when the service rejects a flip", async () => {
    const { session } = makeSession();
    await session.load(JSON.stringify(xDiagram()));
    const before = session.downloadText()!;
    expect(await session.flipCrossing([9, 9, 9, 9])).toBe(false);
    expect(session.error).toMatch(/not found/);
    expect(session.downloadText()).toBe(before);
    expect(session.canUndo).toBe(false);
  });

  it("snaps back when a vertex move is degenerate", async () => {
    const { session } = makeSession();
    await session.load(JSON.stringify(xDiagram()));
    const before = session.downloadText()!;
    expect(await session.moveVertex(0, "0", "0")).toBe(false);
    expect(session.error).toMatch(/rejected: coincident/);
    expect(session.downloadText()).toBe(before);
    expect(await session.moveVertex(0, "-2", "0")).toBe(true);
    expect(session.diagram?.positions[0]).toEqual(["-2", "0"]);
  });

  it("undo with an empty stack is a no-op", async () => {
    const { session } = makeSession();
    expect(await session.undo()).toBe(false);
  });
});
