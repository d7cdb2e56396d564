// Client for the engine's newline-delimited JSON protocol.  The browser
// build talks to the bridge server, which pipes requests into
// `solitaire serve`; tests substitute their own transport.

import type { CellJson, ShapeJson } from "./presets";

export interface MoveJson {
  g: CellJson;
  from: CellJson;
  to: CellJson;
}

export interface NormalFormComponent {
  v?: number[];
  n?: number;
  k?: number;
  a?: number;
  b?: number;
  rank?: number;
}

export interface CoreClient {
  request(body: Record<string, unknown>): Promise<Record<string, unknown>>;
}

export class HttpCoreClient implements CoreClient {
  constructor(private url: string = "/api") {}

  async request(body: Record<string, unknown>): Promise<Record<string, unknown>> {
    const resp = await fetch(this.url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!resp.ok) throw new Error(`bridge returned ${resp.status}`);
    return (await resp.json()) as Record<string, unknown>;
  }
}

export class CoreApi {
  constructor(private client: CoreClient) {}

  private async call(body: Record<string, unknown>): Promise<Record<string, unknown>> {
    const resp = await this.client.request(body);
    if (!resp.ok) throw new Error(String(resp.error ?? "engine error"));
    return resp;
  }

  async legalMoves(shape: ShapeJson, pattern: CellJson[]): Promise<MoveJson[]> {
    const r = await this.call({ op: "legal_moves", shape, pattern });
    return r.moves as MoveJson[];
  }

  async apply(shape: ShapeJson, pattern: CellJson[], move: MoveJson): Promise<CellJson[]> {
    const r = await this.call({ op: "apply", shape, pattern, move });
    return r.pattern as CellJson[];
  }

  async fill(shape: ShapeJson, pattern: CellJson[]): Promise<CellJson[]> {
    const r = await this.call({ op: "fill", shape, pattern, step_cap: 4000 });
    return r.closure as CellJson[];
  }

  async identify(
    shape: ShapeJson,
    pattern: CellJson[],
  ): Promise<{ kind: string; components?: NormalFormComponent[]; rank?: number; excess?: number }> {
    return (await this.call({ op: "identify", shape, pattern })) as any;
  }

  async hull(shape: ShapeJson, pattern: CellJson[]): Promise<CellJson[]> {
    const r = await this.call({ op: "hull", shape, pattern });
    return r.hull as CellJson[];
  }

  async contour(shape: ShapeJson, pattern: CellJson[]): Promise<CellJson[]> {
    const r = await this.call({ op: "contour", shape, pattern, step_cap: 4000 });
    return r.contour as CellJson[];
  }
}
