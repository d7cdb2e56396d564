// Canvas rendering: the square lattice straight, the triangular lattice
// squished and sheared so the 120-degree symmetry is visible, and the
// free group as a depth-limited radial tree.

import { CellJson } from "./presets";
import { BoardViewState, cellKey, sameCell } from "./state";

const SQRT3_2 = Math.sqrt(3) / 2;

export interface Layout {
  place(cell: CellJson): { x: number; y: number };
  radius: number;
}

export function latticeLayout(triangular: boolean, scale = 34, origin = { x: 120, y: 460 }): Layout {
  return {
    radius: scale * 0.36,
    place(cell: CellJson) {
      const [cx, cy] = cell as number[];
      const sx = triangular ? cx + cy / 2 : cx;
      const sy = triangular ? cy * SQRT3_2 : cy;
      return { x: origin.x + sx * scale, y: origin.y - sy * scale };
    },
  };
}

export function treeLayout(depth = 5, center = { x: 330, y: 260 }): Layout {
  const positions = new Map<string, { x: number; y: number }>();
  positions.set("e", center);
  const inverse: Record<string, string> = { a: "a'", b: "b'", "a'": "a", "b'": "b" };
  const baseAngle: Record<string, number> = { a: 0, b: Math.PI / 2, "a'": Math.PI, "b'": -Math.PI / 2 };

  function walk(word: string[], pos: { x: number; y: number }, angle: number, d: number) {
    if (d >= depth) return;
    const step = 150 * Math.pow(0.46, d);
    for (const l of ["a", "b", "a'", "b'"]) {
      if (word.length && inverse[word[word.length - 1]] === l) continue;
      const theta = word.length ? spread(angle, l) : baseAngle[l];
      const child = { x: pos.x + step * Math.cos(theta), y: pos.y + step * Math.sin(theta) };
      const w2 = [...word, l];
      positions.set(w2.join(" "), child);
      walk(w2, child, theta, d + 1);
    }
  }

  function spread(parentAngle: number, letter: string): number {
    // children fan out in a 120-degree cone away from the parent edge
    const offsets: Record<string, number> = { a: -Math.PI / 3, b: 0, "a'": Math.PI / 3, "b'": 2 * Math.PI / 3 };
    const order = ["a", "b", "a'", "b'"];
    const k = order.indexOf(letter);
    return parentAngle + ((k % 3) - 1) * (Math.PI / 3.2);
  }

  walk([], center, 0, 0);
  return {
    radius: 7,
    place(cell: CellJson) {
      const p = positions.get(cell as string);
      return p ?? { x: -100, y: -100 };
    },
  };
}

export function draw(
  canvas: HTMLCanvasElement,
  state: BoardViewState,
  layout: Layout,
): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const patternKeys = new Set(state.pattern.map(cellKey));
  const fillKeys = new Set((state.overlays.filling ?? []).map(cellKey));
  const hullKeys = new Set((state.overlays.hull ?? []).map(cellKey));
  const highlightKeys = new Set(state.highlights.map(cellKey));
  const contourKeys = new Set((state.overlays.contour ?? []).map(cellKey));

  if (state.preset.groupKind === "free") {
    drawTreeEdges(ctx, state, layout);
  }
  for (const cell of state.preset.board) {
    const key = cellKey(cell);
    const { x, y } = layout.place(cell);
    const r = layout.radius;
    if (hullKeys.has(key)) {
      ctx.fillStyle = "#fdf3d8";
      ctx.fillRect(x - r * 1.35, y - r * 1.35, r * 2.7, r * 2.7);
    }
    if (fillKeys.has(key) && !patternKeys.has(key)) {
      ctx.beginPath();
      ctx.arc(x, y, r * 0.95, 0, Math.PI * 2);
      ctx.fillStyle = "#d7e3f4";
      ctx.fill();
    }
    ctx.beginPath();
    ctx.arc(x, y, r, 0, Math.PI * 2);
    ctx.strokeStyle = "#b9b9b9";
    ctx.lineWidth = 1;
    ctx.stroke();
    if (patternKeys.has(key)) {
      ctx.beginPath();
      ctx.arc(x, y, r * 0.78, 0, Math.PI * 2);
      ctx.fillStyle =
        state.selected && sameCell(state.selected, cell) ? "#d8593a" : "#35507c";
      ctx.fill();
    }
    if (contourKeys.has(key)) {
      ctx.beginPath();
      ctx.arc(x, y, r * 1.12, 0, Math.PI * 2);
      ctx.strokeStyle = "#b0771f";
      ctx.lineWidth = 2;
      ctx.stroke();
    }
    if (highlightKeys.has(key)) {
      ctx.beginPath();
      ctx.arc(x, y, r * 0.55, 0, Math.PI * 2);
      ctx.strokeStyle = "#3f9d4e";
      ctx.lineWidth = 3;
      ctx.stroke();
    }
  }
}

function drawTreeEdges(ctx: CanvasRenderingContext2D, state: BoardViewState, layout: Layout) {
  ctx.strokeStyle = "#e0e0e0";
  ctx.lineWidth = 1;
  for (const cell of state.preset.board) {
    const word = cell as string;
    if (word === "e") continue;
    const parts = word.split(" ");
    const parent = parts.slice(0, -1).join(" ") || "e";
    const a = layout.place(parent);
    const b = layout.place(cell);
    ctx.beginPath();
    ctx.moveTo(a.x, a.y);
    ctx.lineTo(b.x, b.y);
    ctx.stroke();
  }
}

export function hitTest(
  state: BoardViewState,
  layout: Layout,
  x: number,
  y: number,
): CellJson | null {
  let best: CellJson | null = null;
  let bestDist = Infinity;
  for (const cell of state.preset.board) {
    const p = layout.place(cell);
    const d = Math.hypot(p.x - x, p.y - y);
    if (d < bestDist) {
      bestDist = d;
      best = cell;
    }
  }
  return bestDist <= layout.radius * 1.35 ? best : null;
}

export function normalFormBadge(state: BoardViewState): string {
  const nf = state.overlays.normalForm;
  if (nf === null) return state.overlays.excessLabel ?? "";
  if ("unavailable" in (nf as object)) return "unavailable";
  const comps = nf as Array<Record<string, number | number[]>>;
  return comps
    .map((c) =>
      c.a !== undefined ? `L(${c.a},${c.b},${c.k})` : `P(${c.n},${c.k})`,
    )
    .join("  ");
}
