import type { QuiverData } from "./types";

export interface Point {
  x: number;
  y: number;
}

/** Positions for mutable nodes m1..mn and frozen nodes f1..fn. */
export type Positions = Record<string, Point>;

export function mutableKey(i: number): string {
  return `m${i}`;
}

export function frozenKey(i: number): string {
  return `f${i}`;
}

/** Deterministic force layout: mutable vertices start on a ring and relax
 * with arrow springs plus pairwise repulsion; each frozen vertex sits
 * outward from its mutable partner. */
export function computeLayout(
  quiver: QuiverData,
  width: number,
  height: number,
  iterations = 120,
): Positions {
  const n = quiver.vertices;
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.26;
  const pts: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    pts.push({ x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  }
  const springLength = n > 1 ? radius * 1.2 : radius;
  for (let step = 0; step < iterations && n > 1; step++) {
    const forces: Point[] = pts.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pts[j].x - pts[i].x;
        const dy = pts[j].y - pts[i].y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const repel = (springLength * springLength) / dist / dist;
        forces[i].x -= (dx / dist) * repel * 14;
        forces[i].y -= (dy / dist) * repel * 14;
        forces[j].x += (dx / dist) * repel * 14;
        forces[j].y += (dy / dist) * repel * 14;
      }
    }
    for (const [s, t] of quiver.arrows) {
      const i = s - 1;
      const j = t - 1;
      const dx = pts[j].x - pts[i].x;
      const dy = pts[j].y - pts[i].y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - springLength) * 0.02;
      forces[i].x += (dx / dist) * pull;
      forces[i].y += (dy / dist) * pull;
      forces[j].x -= (dx / dist) * pull;
      forces[j].y -= (dy / dist) * pull;
    }
    for (let i = 0; i < n; i++) {
      forces[i].x += (cx - pts[i].x) * 0.01;
      forces[i].y += (cy - pts[i].y) * 0.01;
      pts[i].x += clamp(forces[i].x, -8, 8);
      pts[i].y += clamp(forces[i].y, -8, 8);
    }
  }
  const positions: Positions = {};
  for (let i = 0; i < n; i++) {
    positions[mutableKey(i + 1)] = pts[i];
    const dx = pts[i].x - cx;
    const dy = pts[i].y - cy;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const push = radius * 0.85;
    positions[frozenKey(i + 1)] = {
      x: pts[i].x + (dx / len) * push,
      y: pts[i].y + (dy / len) * push,
    };
  }
  return positions;
}

function clamp(x: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, x));
}

export function layoutStorageKey(quiver: QuiverData): string {
  return `greenseq-layout:${JSON.stringify(quiver)}`;
}

/** Persisted drag positions; no-ops when localStorage is unavailable. */
export function loadSavedPositions(quiver: QuiverData): Positions | null {
  try {
    const raw = window.localStorage.getItem(layoutStorageKey(quiver));
    return raw ? (JSON.parse(raw) as Positions) : null;
  } catch {
    return null;
  }
}

export function savePositions(quiver: QuiverData, positions: Positions): void {
  try {
    window.localStorage.setItem(layoutStorageKey(quiver), JSON.stringify(positions));
  } catch {
    // storage may be disabled; dragging still works within the session
  }
}
