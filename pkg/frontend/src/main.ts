/** Browser entry point: wires the editor session to the DOM.  Flips refresh
 * the census immediately; vertex drags debounce the refresh.  At most one
 * mutation is in flight at a time. */

import { ApiClient } from "./api.js";
import { panelModel, renderPanelHtml } from "./panel.js";
import { renderSvg } from "./render.js";
import { EditorSession } from "./state.js";
import { coordToNumber, type CrossingKey } from "./types.js";

const DEBOUNCE_MS = 300;

export function mountEditor(root: HTMLElement, baseUrl: string): EditorSession {
  const session = new EditorSession(new ApiClient(baseUrl));
  root.innerHTML = `
    <div class="toolbar">
      <input type="file" id="diagram-file" accept="application/json">
      <button id="download">Download diagram</button>
      <button id="undo">Undo</button>
      <span id="error-panel" class="error"></span>
    </div>
    <div id="canvas"></div>
    <div id="panel"></div>`;
  const canvas = root.querySelector<HTMLElement>("#canvas")!;
  const panel = root.querySelector<HTMLElement>("#panel")!;
  const errorPanel = root.querySelector<HTMLElement>("#error-panel")!;

  let debounceTimer: ReturnType<typeof setTimeout> | null = null;

  function repaint(): void {
    canvas.innerHTML = renderSvg(session.diagram);
    panel.innerHTML = renderPanelHtml(
      panelModel(session.census, session.censusStale),
    );
    errorPanel.textContent = session.error ?? "";
  }

  async function refreshNow(): Promise<void> {
    await session.refreshCensus();
    repaint();
  }

  function refreshDebounced(): void {
    if (debounceTimer !== null) clearTimeout(debounceTimer);
    debounceTimer = setTimeout(() => void refreshNow(), DEBOUNCE_MS);
  }

  root.querySelector<HTMLInputElement>("#diagram-file")!.addEventListener(
    "change",
    async (ev) => {
      const file = (ev.target as HTMLInputElement).files?.[0];
      if (!file) return;
      if (await session.load(await file.text())) await refreshNow();
      repaint();
    },
  );

  root.querySelector<HTMLButtonElement>("#download")!.addEventListener(
    "click",
    () => {
      const text = session.downloadText();
      if (text === null) return;
      const url = URL.createObjectURL(
        new Blob([text], { type: "application/json" }),
      );
      const a = document.createElement("a");
      a.href = url;
      a.download = "diagram.json";
      a.click();
      URL.revokeObjectURL(url);
    },
  );

  root.querySelector<HTMLButtonElement>("#undo")!.addEventListener(
    "click",
    async () => {
      if (await session.undo()) await refreshNow();
      repaint();
    },
  );

  canvas.addEventListener("click", async (ev) => {
    const target = ev.target as Element;
    const keyAttr = target.getAttribute?.("data-key");
    if (keyAttr) {
      const key = keyAttr.split(",").map(Number) as CrossingKey;
      session.selection = { kind: "crossing", key };
      if (await session.flipCrossing(key)) await refreshNow();
      repaint();
      return;
    }
    const vertexAttr = target.getAttribute?.("data-vertex");
    if (vertexAttr !== null && vertexAttr !== undefined) {
      session.selection = { kind: "vertex", id: Number(vertexAttr) };
      repaint();
    }
  });

  // arrow-key nudging of the selected vertex (drag equivalent with exact
  // coordinates; rejected moves snap back server-side)
  root.addEventListener("keydown", async (ev) => {
    if (session.selection?.kind !== "vertex" || session.diagram === null) return;
    const deltas: Record<string, [number, number]> = {
      ArrowLeft: [-1, 0],
      ArrowRight: [1, 0],
      ArrowUp: [0, 1],
      ArrowDown: [0, -1],
    };
    const delta = deltas[ev.key];
    if (!delta) return;
    const v = session.selection.id;
    const [px, py] = session.diagram.positions[v];
    const step = 1 / 64; // exact binary fraction, so coordinates stay exact
    const x = String(coordToNumber(px) + delta[0] * step);
    const y = String(coordToNumber(py) + delta[1] * step);
    if (await session.moveVertex(v, x, y)) refreshDebounced();
    repaint();
  });

  repaint();
  return session;
}

declare global {
  interface Window {
    linknotMount?: typeof mountEditor;
  }
}

if (typeof window !== "undefined") {
  window.linknotMount = mountEditor;
  const root = document.getElementById("editor-root");
  if (root) mountEditor(root, "");
}
