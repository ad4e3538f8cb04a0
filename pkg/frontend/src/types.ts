/** Wire types mirroring the explorer service schemas. */

export interface QuiverData {
  vertices: number;
  arrows: number[][];
}

export interface VertexView {
  id: number;
  green: boolean;
  c_vector: number[];
}

export interface HistoryStep {
  vertex: number;
  green: boolean;
  c_vector: number[];
}

export interface View {
  principal: number[][];
  cmat: number[][];
  vertices: VertexView[];
  history: HistoryStep[];
  all_red: boolean;
  mgs_complete: boolean;
  permutation: number[] | null;
  /** Present on mutate responses: whether the move just made was green. */
  green?: boolean;
}

export interface SessionHandle {
  id: string;
  view: View;
}

export interface ExportPayload {
  quiver: QuiverData;
  seq: string;
}

export interface SessionClient {
  createSession(quiver: QuiverData): Promise<SessionHandle>;
  getView(id: string): Promise<View>;
  mutate(id: string, vertex: number): Promise<View>;
  undo(id: string): Promise<View>;
  exportSession(id: string): Promise<ExportPayload>;
  deleteSession(id: string): Promise<void>;
}
