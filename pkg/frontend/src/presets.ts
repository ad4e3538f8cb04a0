import type { QuiverData } from "./types";

/** Built-in quivers; a2 is the worked example whose two maximal green
 * sequences are (1,2) and (2,1,2), q222 the classic quiver without any. */
export const PRESETS: Record<string, QuiverData> = {
  a2: { vertices: 2, arrows: [[1, 2, 1]] },
  a3: { vertices: 3, arrows: [[1, 2, 1], [2, 3, 1]] },
  q222: { vertices: 3, arrows: [[1, 2, 2], [2, 3, 2], [3, 1, 2]] },
};

export function presetNames(): string[] {
  return Object.keys(PRESETS);
}

export function parseQuiverFile(text: string): QuiverData {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    throw new Error(`not valid JSON: ${(err as Error).message}`);
  }
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new Error("quiver file must contain a JSON object");
  }
  const obj = data as Record<string, unknown>;
  // accept both a bare quiver and an exported {quiver, seq} file
  if (obj.quiver && typeof obj.quiver === "object") {
    return parseQuiverObject(obj.quiver as Record<string, unknown>);
  }
  return parseQuiverObject(obj);
}

function parseQuiverObject(obj: Record<string, unknown>): QuiverData {
  if (typeof obj.vertices !== "number" || obj.vertices < 1) {
    throw new Error("quiver needs a positive 'vertices' count");
  }
  const arrows = Array.isArray(obj.arrows) ? (obj.arrows as number[][]) : [];
  for (const arrow of arrows) {
    if (!Array.isArray(arrow) || arrow.length < 2 || arrow.length > 3) {
      throw new Error(`bad arrow entry ${JSON.stringify(arrow)}`);
    }
  }
  return { vertices: obj.vertices, arrows };
}
