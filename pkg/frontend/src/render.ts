import { frozenKey, mutableKey, type Point, type Positions } from "./layout";
import type { View } from "./types";

export const GREEN = "#2e9e44";
export const RED = "#d14343";
export const FROZEN = "#7d8796";

const SVG_NS = "http://www.w3.org/2000/svg";
const NODE_RADIUS = 16;
const FROZEN_SIZE = 24;

export interface Arrow {
  from: string;
  to: string;
  mult: number;
}

/** Arrows of the framed quiver at this state: mutable-mutable from the
 * principal part, mutable-frozen from the c-matrix. */
export function framedArrows(view: View): Arrow[] {
  const arrows: Arrow[] = [];
  const n = view.principal.length;
  for (let i = 0; i < n; i++) {
    for (let j = i + 1; j < n; j++) {
      const v = view.principal[i][j];
      if (v > 0) arrows.push({ from: mutableKey(i + 1), to: mutableKey(j + 1), mult: v });
      if (v < 0) arrows.push({ from: mutableKey(j + 1), to: mutableKey(i + 1), mult: -v });
    }
  }
  for (let i = 0; i < n; i++) {
    for (let j = 0; j < n; j++) {
      const v = view.cmat[i][j];
      if (v > 0) arrows.push({ from: mutableKey(i + 1), to: frozenKey(j + 1), mult: v });
      if (v < 0) arrows.push({ from: frozenKey(j + 1), to: mutableKey(i + 1), mult: -v });
    }
  }
  return arrows;
}

export interface RenderHandlers {
  onVertexClick(vertex: number): void;
  onDragEnd(positions: Positions): void;
}

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

function shorten(a: Point, b: Point, by: number): Point {
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const len = Math.max(Math.hypot(dx, dy), 1);
  return { x: b.x - (dx / len) * by, y: b.y - (dy / len) * by };
}

export function renderGraph(
  svg: SVGSVGElement,
  view: View,
  positions: Positions,
  handlers: RenderHandlers,
): void {
  svg.innerHTML = "";
  const defs = el("defs", {});
  const marker = el("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#48505e" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const edgeLayer = el("g", {});
  const nodeLayer = el("g", {});
  svg.appendChild(edgeLayer);
  svg.appendChild(nodeLayer);

  for (const arrow of framedArrows(view)) {
    const from = positions[arrow.from];
    const to = positions[arrow.to];
    if (!from || !to) continue;
    const margin = arrow.to.startsWith("m") ? NODE_RADIUS + 4 : FROZEN_SIZE / 2 + 6;
    const tip = shorten(from, to, margin);
    const start = shorten(to, from, NODE_RADIUS + 2);
    edgeLayer.appendChild(
      el("line", {
        x1: String(start.x),
        y1: String(start.y),
        x2: String(tip.x),
        y2: String(tip.y),
        stroke: "#48505e",
        "stroke-width": arrow.mult > 1 ? "2.4" : "1.4",
        "marker-end": "url(#arrowhead)",
      }),
    );
    if (arrow.mult > 1) {
      const label = el("text", {
        x: String((start.x + tip.x) / 2 + 6),
        y: String((start.y + tip.y) / 2 - 6),
        class: "edge-label",
      });
      label.textContent = String(arrow.mult);
      edgeLayer.appendChild(label);
    }
  }

  const n = view.vertices.length;
  for (let i = 1; i <= n; i++) {
    const fp = positions[frozenKey(i)];
    if (!fp) continue;
    const rect = el("rect", {
      x: String(fp.x - FROZEN_SIZE / 2),
      y: String(fp.y - FROZEN_SIZE / 2),
      width: String(FROZEN_SIZE),
      height: String(FROZEN_SIZE),
      rx: "3",
      fill: "#eef1f5",
      stroke: FROZEN,
      "data-node": frozenKey(i),
      class: "frozen-node",
    });
    attachDrag(rect, frozenKey(i), positions, svg, handlers);
    nodeLayer.appendChild(rect);
    const label = el("text", { x: String(fp.x), y: String(fp.y + 5), class: "node-label frozen-label" });
    label.textContent = `${i}'`;
    nodeLayer.appendChild(label);
  }

  for (const vertex of view.vertices) {
    const p = positions[mutableKey(vertex.id)];
    if (!p) continue;
    const circle = el("circle", {
      cx: String(p.x),
      cy: String(p.y),
      r: String(NODE_RADIUS),
      fill: vertex.green ? GREEN : RED,
      stroke: "#1f2630",
      "data-node": mutableKey(vertex.id),
      "data-vertex": String(vertex.id),
      class: "mutable-node",
    });
    circle.addEventListener("click", () => handlers.onVertexClick(vertex.id));
    attachDrag(circle, mutableKey(vertex.id), positions, svg, handlers);
    nodeLayer.appendChild(circle);
    const label = el("text", { x: String(p.x), y: String(p.y + 5), class: "node-label" });
    label.textContent = String(vertex.id);
    label.addEventListener("click", () => handlers.onVertexClick(vertex.id));
    nodeLayer.appendChild(label);
  }
}

function attachDrag(
  node: SVGElement,
  key: string,
  positions: Positions,
  svg: SVGSVGElement,
  handlers: RenderHandlers,
): void {
  node.addEventListener("pointerdown", (down) => {
    const event = down as PointerEvent;
    const startX = event.clientX;
    const startY = event.clientY;
    const origin = { ...positions[key] };
    let moved = false;

    const onMove = (move: PointerEvent) => {
      const dx = move.clientX - startX;
      const dy = move.clientY - startY;
      if (Math.hypot(dx, dy) > 3) moved = true;
      if (!moved) return;
      positions[key] = { x: origin.x + dx, y: origin.y + dy };
      if (key.startsWith("m")) {
        node.setAttribute("cx", String(positions[key].x));
        node.setAttribute("cy", String(positions[key].y));
      } else {
        node.setAttribute("x", String(positions[key].x - FROZEN_SIZE / 2));
        node.setAttribute("y", String(positions[key].y - FROZEN_SIZE / 2));
      }
    };
    const onUp = () => {
      window.removeEventListener("pointermove", onMove);
      window.removeEventListener("pointerup", onUp);
      if (moved) handlers.onDragEnd(positions);
    };
    window.addEventListener("pointermove", onMove);
    window.addEventListener("pointerup", onUp);
  });
}
