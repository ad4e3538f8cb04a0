import { describe, expect, it } from "vitest";

import { computeLayout, frozenKey, loadSavedPositions, mutableKey } from "../src/layout";
import { A2 } from "./fake_client";

const A3 = { vertices: 3, arrows: [[1, 2, 1], [2, 3, 1]] };

describe("computeLayout", () => {
  it("is deterministic", () => {
    expect(computeLayout(A3, 640, 480)).toEqual(computeLayout(A3, 640, 480));
  });

  it("places one mutable and one frozen node per vertex", () => {
    const positions = computeLayout(A3, 640, 480);
    for (let i = 1; i <= 3; i++) {
      expect(positions[mutableKey(i)]).toBeDefined();
      expect(positions[frozenKey(i)]).toBeDefined();
    }
    expect(Object.keys(positions)).toHaveLength(6);
  });

  it("keeps nodes inside a sane margin of the canvas", () => {
    const positions = computeLayout(A2, 640, 480);
    for (const p of Object.values(positions)) {
      expect(p.x).toBeGreaterThan(-50);
      expect(p.x).toBeLessThan(690);
      expect(p.y).toBeGreaterThan(-50);
      expect(p.y).toBeLessThan(530);
    }
  });

  it("separates distinct mutable vertices", () => {
    const positions = computeLayout(A3, 640, 480);
    const a = positions[mutableKey(1)];
    const b = positions[mutableKey(2)];
    expect(Math.hypot(a.x - b.x, a.y - b.y)).toBeGreaterThan(30);
  });

  it("handles a single vertex without degenerating", () => {
    const positions = computeLayout({ vertices: 1, arrows: [] }, 640, 480);
    expect(positions[mutableKey(1)]).toBeDefined();
    expect(positions[frozenKey(1)]).toBeDefined();
  });
});

describe("saved positions", () => {
  it("returns null when no window/localStorage is available", () => {
    expect(loadSavedPositions(A2)).toBeNull();
  });
});
