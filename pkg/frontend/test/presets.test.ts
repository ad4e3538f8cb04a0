import { describe, expect, it } from "vitest";

import { parseQuiverFile, PRESETS, presetNames } from "../src/presets";

describe("presets", () => {
  it("includes the documented quivers", () => {
    expect(presetNames()).toEqual(expect.arrayContaining(["a2", "a3", "q222"]));
    expect(PRESETS.q222.arrows).toContainEqual([1, 2, 2]);
  });
});

describe("parseQuiverFile", () => {
  it("accepts a bare quiver", () => {
    const q = parseQuiverFile('{"vertices": 2, "arrows": [[1, 2, 1]]}');
    expect(q).toEqual({ vertices: 2, arrows: [[1, 2, 1]] });
  });

  it("accepts a previously exported {quiver, seq} file", () => {
    const q = parseQuiverFile(
      '{"quiver": {"vertices": 2, "arrows": [[1, 2, 1]]}, "seq": "1,2"}',
    );
    expect(q.vertices).toBe(2);
  });

  it("rejects non-JSON with a readable message", () => {
    expect(() => parseQuiverFile("not json")).toThrowError(/not valid JSON/);
  });

  it("rejects structurally bad quivers", () => {
    expect(() => parseQuiverFile("[1, 2]")).toThrowError(/object/);
    expect(() => parseQuiverFile('{"vertices": 0}')).toThrowError(/vertices/);
    expect(() => parseQuiverFile('{"vertices": 2, "arrows": [[1]]}')).toThrowError(
      /bad arrow/,
    );
  });
});
