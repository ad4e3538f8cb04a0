/** Canned A2 session used by the model and DOM tests: a transition table
 * over mutation paths, with views copied from the real service output. */

import type {
  ExportPayload,
  HistoryStep,
  QuiverData,
  SessionClient,
  SessionHandle,
  View,
} from "../src/types";

export const A2: QuiverData = { vertices: 2, arrows: [[1, 2, 1]] };

const B_FORWARD = [
  [0, 1],
  [-1, 0],
];
const B_BACKWARD = [
  [0, -1],
  [1, 0],
];

function view(
  principal: number[][],
  cmat: number[][],
  history: HistoryStep[],
  permutation: number[] | null = null,
): View {
  const vertices = cmat.map((row, index) => ({
    id: index + 1,
    green: row.some((x) => x > 0),
    c_vector: [...row],
  }));
  const allRed = vertices.every((v) => !v.green);
  return {
    principal,
    cmat,
    vertices,
    history,
    all_red: allRed,
    mgs_complete: allRed && history.length > 0 && history.every((h) => h.green),
    permutation,
  };
}

const step = (vertex: number, green: boolean, c: number[]): HistoryStep => ({
  vertex,
  green,
  c_vector: c,
});

const VIEWS: Record<string, View> = {
  "": view(B_FORWARD, [[1, 0], [0, 1]], []),
  "1": view(B_BACKWARD, [[-1, 0], [0, 1]], [step(1, true, [1, 0])]),
  "2": view(B_BACKWARD, [[1, 1], [0, -1]], [step(2, true, [0, 1])]),
  "1,2": view(
    B_FORWARD,
    [[-1, 0], [0, -1]],
    [step(1, true, [1, 0]), step(2, true, [0, 1])],
    [1, 2],
  ),
  "1,1": view(
    B_FORWARD,
    [[1, 0], [0, 1]],
    [step(1, true, [1, 0]), step(1, false, [-1, 0])],
  ),
  "2,1": view(
    B_FORWARD,
    [[-1, -1], [1, 0]],
    [step(2, true, [0, 1]), step(1, true, [1, 1])],
  ),
  "2,1,2": view(
    B_BACKWARD,
    [[0, -1], [-1, 0]],
    [step(2, true, [0, 1]), step(1, true, [1, 1]), step(2, true, [1, 0])],
    [2, 1],
  ),
};

export class FakeClient implements SessionClient {
  path: number[] = [];
  inFlight = 0;
  maxInFlight = 0;
  mutateDelayMs = 0;

  private lookup(): View {
    const key = this.path.join(",");
    const found = VIEWS[key];
    if (!found) throw new Error(`fake client has no canned view for "${key}"`);
    return structuredClone(found);
  }

  async createSession(_quiver: QuiverData): Promise<SessionHandle> {
    this.path = [];
    return { id: "fake-session", view: this.lookup() };
  }

  async getView(_id: string): Promise<View> {
    return this.lookup();
  }

  async mutate(_id: string, vertex: number): Promise<View> {
    this.inFlight += 1;
    this.maxInFlight = Math.max(this.maxInFlight, this.inFlight);
    if (this.mutateDelayMs) {
      await new Promise((resolve) => setTimeout(resolve, this.mutateDelayMs));
    }
    const before = this.lookup();
    this.path.push(vertex);
    const after = this.lookup();
    after.green = before.vertices[vertex - 1].green;
    this.inFlight -= 1;
    return after;
  }

  async undo(_id: string): Promise<View> {
    if (this.path.length === 0) throw new Error("nothing to undo");
    this.path.pop();
    return this.lookup();
  }

  async exportSession(_id: string): Promise<ExportPayload> {
    return { quiver: A2, seq: this.path.join(",") };
  }

  async deleteSession(_id: string): Promise<void> {
    this.path = [];
  }
}
