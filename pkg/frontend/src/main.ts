import { ExplorerClient } from "./api";
import {
  computeLayout,
  loadSavedPositions,
  savePositions,
  type Positions,
} from "./layout";
import { ExplorerModel, formatPermutation } from "./model";
import { parseQuiverFile, PRESETS, presetNames } from "./presets";
import { renderGraph } from "./render";
import type { QuiverData } from "./types";

const DEFAULT_SERVICE =
  (window as unknown as { GREENSEQ_SERVICE_URL?: string }).GREENSEQ_SERVICE_URL ??
  "http://127.0.0.1:8642";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function start(): void {
  const serviceInput = byId<HTMLInputElement>("service-url");
  serviceInput.value = DEFAULT_SERVICE;

  let client = new ExplorerClient(serviceInput.value);
  let model = new ExplorerModel(client);
  let positions: Positions = {};

  const svg = byId<HTMLElement>("graph") as unknown as SVGSVGElement;
  const presetSelect = byId<HTMLSelectElement>("preset");
  const fileInput = byId<HTMLInputElement>("quiver-file");
  const banner = byId<HTMLDivElement>("error-banner");
  const badge = byId<HTMLDivElement>("badge");
  const sequenceLog = byId<HTMLDivElement>("sequence-log");
  const cvectorPanel = byId<HTMLDivElement>("cvectors");
  const toast = byId<HTMLDivElement>("toast");

  for (const name of presetNames()) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.appendChild(option);
  }

  let toastTimer: ReturnType<typeof setTimeout> | null = null;
  function showToast(message: string): void {
    toast.textContent = message;
    toast.classList.add("visible");
    if (toastTimer) clearTimeout(toastTimer);
    toastTimer = setTimeout(() => toast.classList.remove("visible"), 2600);
  }

  function redraw(): void {
    banner.textContent = model.error ?? "";
    banner.style.display = model.error ? "block" : "none";
    if (model.error) showToast(model.error);

    const view = model.view;
    if (!view || !model.quiver) return;

    renderGraph(svg, view, positions, {
      onVertexClick: (vertex) => {
        if (!model.isGreen(vertex)) {
          const go = window.confirm(
            `Vertex ${vertex} is red; mutating it leaves the green world. Proceed?`,
          );
          if (!go) return;
        }
        void model.clickVertex(vertex).then(() => {
          if (model.lastMoveGreen === false) showToast("non-green mutation recorded");
        });
      },
      onDragEnd: (next) => {
        positions = next;
        if (model.quiver) savePositions(model.quiver, positions);
      },
    });

    cvectorPanel.innerHTML = "";
    for (const vertex of view.vertices) {
      const row = document.createElement("div");
      row.className = `cvec ${vertex.green ? "green" : "red"}`;
      row.textContent = `c(${vertex.id}) = (${vertex.c_vector.join(", ")})`;
      cvectorPanel.appendChild(row);
    }

    sequenceLog.innerHTML = "";
    view.history.forEach((step, index) => {
      const item = document.createElement("span");
      item.className = `step ${step.green ? "green" : "red"}`;
      item.title = `c-vector (${step.c_vector.join(", ")})`;
      item.textContent = `${index ? " , " : ""}${step.vertex}`;
      sequenceLog.appendChild(item);
    });

    const completion = model.completion;
    if (completion) {
      badge.style.display = "block";
      badge.textContent =
        `Maximal green sequence complete: (${completion.sequence})  ` +
        `σ = ${formatPermutation(completion.sigma)}`;
    } else if (view.all_red) {
      badge.style.display = "block";
      badge.textContent = view.permutation
        ? `All red (reddening): σ = ${formatPermutation(view.permutation)}`
        : "All red";
    } else {
      badge.style.display = "none";
    }
  }

  model.subscribe(redraw);

  function loadQuiver(quiver: QuiverData): void {
    positions = loadSavedPositions(quiver) ?? computeLayout(quiver, 640, 480);
    void model.loadQuiver(quiver);
  }

  byId<HTMLButtonElement>("load-preset").addEventListener("click", () => {
    loadQuiver(PRESETS[presetSelect.value]);
  });

  fileInput.addEventListener("change", () => {
    const file = fileInput.files?.[0];
    if (!file) return;
    void file.text().then((text) => {
      try {
        loadQuiver(parseQuiverFile(text));
      } catch (err) {
        model.error = (err as Error).message;
        banner.textContent = model.error;
        banner.style.display = "block";
      }
    });
  });

  byId<HTMLButtonElement>("undo").addEventListener("click", () => {
    void model.undo();
  });

  byId<HTMLButtonElement>("export").addEventListener("click", () => {
    void model
      .exportData()
      .then((payload) => {
        const blob = new Blob([JSON.stringify(payload, null, 2)], {
          type: "application/json",
        });
        const url = URL.createObjectURL(blob);
        const link = document.createElement("a");
        link.href = url;
        link.download = "green-sequence.json";
        link.click();
        URL.revokeObjectURL(url);
      })
      .catch((err) => showToast((err as Error).message));
  });

  serviceInput.addEventListener("change", () => {
    client = new ExplorerClient(serviceInput.value || DEFAULT_SERVICE);
    model = new ExplorerModel(client);
    model.subscribe(redraw);
    badge.style.display = "none";
  });

  loadQuiver(PRESETS.a2);
}

start();
