import type { ExportPayload, QuiverData, SessionClient, SessionHandle, View } from "./types";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function readError(res: Response): Promise<string> {
  try {
    const data = await res.json();
    if (data && typeof data.error === "string") return data.error;
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${res.status}`;
}

/** Thin fetch wrapper over the explorer session endpoints. */
export class ExplorerClient implements SessionClient {
  constructor(private baseUrl: string) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.baseUrl + path, init);
    if (!res.ok) throw new ApiError(res.status, await readError(res));
    return (await res.json()) as T;
  }

  createSession(quiver: QuiverData): Promise<SessionHandle> {
    return this.request<SessionHandle>("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ quiver }),
    });
  }

  getView(id: string): Promise<View> {
    return this.request<View>(`/sessions/${id}`);
  }

  mutate(id: string, vertex: number): Promise<View> {
    return this.request<View>(`/sessions/${id}/mutate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<View> {
    return this.request<View>(`/sessions/${id}/undo`, { method: "POST" });
  }

  exportSession(id: string): Promise<ExportPayload> {
    return this.request<ExportPayload>(`/sessions/${id}/export`);
  }

  async deleteSession(id: string): Promise<void> {
    await this.request<unknown>(`/sessions/${id}`, { method: "DELETE" });
  }
}
