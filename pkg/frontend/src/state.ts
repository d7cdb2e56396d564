// Board state machine.  All mutation goes through the controller below;
// the invariants are: the move history replays from the initial pattern
// to the current one, and every highlighted destination comes from the
// engine's own legal-move list (the UI never invents moves).

import { CoreApi, MoveJson, NormalFormComponent } from "./client";
import { CellJson, Preset } from "./presets";

export function cellKey(c: CellJson): string {
  return typeof c === "string" ? c : c.join(",");
}

export function sameCell(a: CellJson, b: CellJson): boolean {
  return cellKey(a) === cellKey(b);
}

export interface Overlays {
  filling: CellJson[] | null;
  hull: CellJson[] | null;
  contour: CellJson[] | null;
  normalForm: NormalFormComponent[] | { unavailable: true } | null;
  excessLabel: string | null;
}

export interface Toggles {
  filling: boolean;
  hull: boolean;
  contour: boolean;
  normalForm: boolean;
}

export interface BoardViewState {
  preset: Preset;
  pattern: CellJson[];
  selected: CellJson | null;
  legalMoves: MoveJson[];
  highlights: CellJson[];
  overlays: Overlays;
  toggles: Toggles;
  history: MoveJson[];
  future: MoveJson[];
  initial: CellJson[];
  banner: string | null;
  busy: boolean;
}

export function freshState(preset: Preset, pattern?: CellJson[]): BoardViewState {
  const start = (pattern ?? preset.start).slice();
  return {
    preset,
    pattern: start.slice(),
    selected: null,
    legalMoves: [],
    highlights: [],
    overlays: { filling: null, hull: null, contour: null, normalForm: null, excessLabel: null },
    toggles: { filling: true, hull: false, contour: false, normalForm: true },
    history: [],
    future: [],
    initial: start.slice(),
    banner: null,
    busy: false,
  };
}

/** Replays the recorded moves over the initial pattern (set rewriting only). */
export function replayHistory(initial: CellJson[], history: MoveJson[]): CellJson[] {
  let cells = initial.map(cellKey);
  for (const m of history) {
    const from = cellKey(m.from);
    const to = cellKey(m.to);
    if (!cells.includes(from) || cells.includes(to)) {
      throw new Error("history does not replay");
    }
    cells = cells.filter((c) => c !== from);
    cells.push(to);
  }
  return history.length ? rebuild(initial, history, cells) : initial.slice();
}

function rebuild(initial: CellJson[], history: MoveJson[], keys: string[]): CellJson[] {
  const byKey = new Map<string, CellJson>();
  for (const c of initial) byKey.set(cellKey(c), c);
  for (const m of history) byKey.set(cellKey(m.to), m.to);
  return keys.map((k) => {
    const c = byKey.get(k);
    if (c === undefined) throw new Error("history does not replay");
    return c;
  });
}

export function destinationsFor(state: BoardViewState, marble: CellJson): CellJson[] {
  return state.legalMoves.filter((m) => sameCell(m.from, marble)).map((m) => m.to);
}

export function exportTrace(state: BoardViewState): string {
  return JSON.stringify({ trace: state.history });
}

export type ClickResult = "selected" | "moved" | "inert" | "deselected";

/** Orchestrates state transitions; at most one engine mutation in flight. */
export class BoardController {
  state: BoardViewState;

  constructor(private api: CoreApi, preset: Preset, pattern?: CellJson[]) {
    this.state = freshState(preset, pattern);
  }

  async load(preset: Preset, pattern?: CellJson[]): Promise<void> {
    this.state = freshState(preset, pattern);
    await this.refresh();
  }

  /** Re-fetches legal moves and overlays for the current pattern. */
  async refresh(): Promise<void> {
    const s = this.state;
    try {
      s.legalMoves = await this.api.legalMoves(s.preset.shape, s.pattern);
      s.banner = null;
    } catch (err) {
      s.banner = `engine unreachable: ${err}`;
      s.legalMoves = [];
      s.highlights = [];
      return;
    }
    if (s.selected !== null) {
      s.highlights = destinationsFor(s, s.selected);
    }
    await this.refreshOverlays();
  }

  async refreshOverlays(): Promise<void> {
    const s = this.state;
    const o = s.overlays;
    if (!s.pattern.length) {
      o.filling = o.hull = o.contour = o.normalForm = null;
      o.excessLabel = null;
      return;
    }
    try {
      o.filling = s.toggles.filling ? await this.api.fill(s.preset.shape, s.pattern) : null;
      if (s.toggles.hull && s.preset.groupKind === "Zd") {
        o.hull = await this.api.hull(s.preset.shape, s.pattern);
      } else {
        o.hull = null;
      }
      o.contour = s.toggles.contour
        ? await this.api.contour(s.preset.shape, s.pattern)
        : null;
      if (s.toggles.normalForm) {
        const nf = await this.api.identify(s.preset.shape, s.pattern);
        if (nf.components !== undefined) {
          o.normalForm = nf.components;
          o.excessLabel = null;
        } else {
          o.normalForm = null;
          o.excessLabel = `rank ${nf.rank}, excess ${nf.excess}`;
        }
      }
    } catch (err) {
      // budget exceeded or unsupported combination: mark unavailable
      o.normalForm = { unavailable: true };
    }
  }

  /** Marble selection / move application; illegal clicks are inert. */
  async onCellClick(cell: CellJson): Promise<ClickResult> {
    const s = this.state;
    if (s.busy || s.banner) return "inert";
    const inPattern = s.pattern.some((c) => sameCell(c, cell));
    if (s.selected === null) {
      if (!inPattern) return "inert";
      s.selected = cell;
      s.highlights = destinationsFor(s, cell);
      return "selected";
    }
    if (sameCell(s.selected, cell)) {
      s.selected = null;
      s.highlights = [];
      return "deselected";
    }
    const move = s.legalMoves.find(
      (m) => sameCell(m.from, s.selected as CellJson) && sameCell(m.to, cell),
    );
    if (move === undefined) {
      if (inPattern) {
        s.selected = cell;
        s.highlights = destinationsFor(s, cell);
        return "selected";
      }
      return "inert";
    }
    s.busy = true;
    try {
      const next = await this.api.apply(s.preset.shape, s.pattern, move);
      s.pattern = next;
      s.history.push(move);
      s.future = [];
      s.selected = null;
      s.highlights = [];
    } catch (err) {
      s.banner = `engine unreachable: ${err}`;
      return "inert";
    } finally {
      s.busy = false;
    }
    await this.refresh();
    return "moved";
  }

  async undo(): Promise<boolean> {
    const s = this.state;
    if (s.busy || !s.history.length) return false;
    const undone = s.history.pop() as MoveJson;
    s.future.push(undone);
    s.pattern = replayHistory(s.initial, s.history);
    s.selected = null;
    s.highlights = [];
    await this.refresh();
    return true;
  }

  async redo(): Promise<boolean> {
    const s = this.state;
    if (s.busy || !s.future.length) return false;
    const move = s.future.pop() as MoveJson;
    s.history.push(move);
    s.pattern = replayHistory(s.initial, s.history);
    s.selected = null;
    s.highlights = [];
    await this.refresh();
    return true;
  }

  /** Invariant check used by the tests: history replays to the pattern. */
  historyConsistent(): boolean {
    const replayed = replayHistory(this.state.initial, this.state.history)
      .map(cellKey)
      .sort();
    const current = this.state.pattern.map(cellKey).sort();
    return JSON.stringify(replayed) === JSON.stringify(current);
  }
}
