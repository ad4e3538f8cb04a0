import type { ExportPayload, QuiverData, SessionClient, View } from "./types";

export interface CompletionBadge {
  sigma: number[];
  sequence: string;
}

type Listener = () => void;

/** UI-facing state machine: one session at a time, clicks queued so only
 * one mutation request is in flight, errors surfaced as a message. */
export class ExplorerModel {
  sessionId: string | null = null;
  quiver: QuiverData | null = null;
  view: View | null = null;
  error: string | null = null;
  /** green flag of the last mutate response, for toasts */
  lastMoveGreen: boolean | null = null;

  private listeners: Listener[] = [];
  private chain: Promise<void> = Promise.resolve();

  constructor(private client: SessionClient) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private notify(): void {
    for (const fn of this.listeners) fn();
  }

  /** Serialize tasks; failures land in this.error instead of rejecting. */
  private enqueue(task: () => Promise<void>): Promise<void> {
    const run = async () => {
      try {
        this.error = null;
        await task();
      } catch (err) {
        this.error = (err as Error).message;
      }
      this.notify();
    };
    this.chain = this.chain.then(run);
    return this.chain;
  }

  loadQuiver(quiver: QuiverData): Promise<void> {
    return this.enqueue(async () => {
      const handle = await this.client.createSession(quiver);
      this.sessionId = handle.id;
      this.quiver = quiver;
      this.view = handle.view;
      this.lastMoveGreen = null;
    });
  }

  clickVertex(vertex: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.sessionId) throw new Error("no session loaded");
      const view = await this.client.mutate(this.sessionId, vertex);
      this.view = view;
      this.lastMoveGreen = view.green ?? null;
    });
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.sessionId) throw new Error("no session loaded");
      this.view = await this.client.undo(this.sessionId);
      this.lastMoveGreen = null;
    });
  }

  async exportData(): Promise<ExportPayload> {
    if (!this.sessionId) throw new Error("no session loaded");
    return this.client.exportSession(this.sessionId);
  }

  isGreen(vertex: number): boolean {
    const entry = this.view?.vertices.find((v) => v.id === vertex);
    return entry ? entry.green : false;
  }

  /** The completion badge contents once a maximal green sequence is done. */
  get completion(): CompletionBadge | null {
    const view = this.view;
    if (!view || !view.mgs_complete || !view.permutation) return null;
    return {
      sigma: view.permutation,
      sequence: view.history.map((h) => h.vertex).join(","),
    };
  }

  get sequenceText(): string {
    return this.view ? this.view.history.map((h) => h.vertex).join(",") : "";
  }
}

/** sigma as cycle notation, e.g. [2,1] -> "(1 2)"; identity -> "id". */
export function formatPermutation(image: number[]): string {
  const seen = new Array(image.length).fill(false);
  const cycles: number[][] = [];
  for (let start = 1; start <= image.length; start++) {
    if (seen[start - 1]) continue;
    const cycle = [start];
    seen[start - 1] = true;
    let next = image[start - 1];
    while (next !== start) {
      cycle.push(next);
      seen[next - 1] = true;
      next = image[next - 1];
    }
    if (cycle.length > 1) cycles.push(cycle);
  }
  if (cycles.length === 0) return "id";
  return cycles.map((c) => `(${c.join(" ")})`).join("");
}
