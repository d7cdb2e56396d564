// Shape presets the playground offers, in the engine's wire format.

export type CellJson = number[] | string;

export interface ShapeJson {
  group: { kind: string; d?: number; k?: number };
  S: CellJson[];
  C: CellJson[] | "same";
}

export interface Preset {
  name: string;
  label: string;
  groupKind: "Zd" | "free";
  shape: ShapeJson;
  /** Starting pattern shown when the preset loads. */
  start: CellJson[];
  /** Cells rendered as clickable board positions. */
  board: CellJson[];
}

const Z2 = { kind: "Zd", d: 2 };

function latticeBoard(xMin: number, xMax: number, yMin: number, yMax: number): CellJson[] {
  const out: CellJson[] = [];
  for (let y = yMin; y <= yMax; y++) {
    for (let x = xMin; x <= xMax; x++) {
      out.push([x, y]);
    }
  }
  return out;
}

/** Freely reduced words over a,b of length <= depth, as wire strings. */
export function freeBall(depth: number): string[] {
  const letters = ["a", "b", "a'", "b'"];
  const inverse: Record<string, string> = { a: "a'", b: "b'", "a'": "a", "b'": "b" };
  let frontier: string[][] = [[]];
  const out: string[] = ["e"];
  for (let d = 0; d < depth; d++) {
    const next: string[][] = [];
    for (const w of frontier) {
      for (const l of letters) {
        if (w.length && inverse[w[w.length - 1]] === l) continue;
        const w2 = [...w, l];
        next.push(w2);
        out.push(w2.join(" "));
      }
    }
    frontier = next;
  }
  return out;
}

export const PRESETS: Preset[] = [
  {
    name: "triangle",
    label: "Triangle  S = C = {(0,0),(1,0),(0,1)}",
    groupKind: "Zd",
    shape: { group: Z2, S: [[0, 0], [1, 0], [0, 1]], C: "same" },
    start: [[0, 0], [1, 0], [2, 0], [3, 0]],
    board: latticeBoard(-2, 9, -2, 9),
  },
  {
    name: "square",
    label: "Square  S = C = {0,1}²",
    groupKind: "Zd",
    shape: { group: Z2, S: [[0, 0], [1, 0], [0, 1], [1, 1]], C: "same" },
    start: [[0, 0], [1, 0], [2, 0], [0, 1], [0, 2]],
    board: latticeBoard(-2, 9, -2, 9),
  },
  {
    name: "plus",
    label: "Plus with pivot-only centre (C ⊊ S)",
    groupKind: "Zd",
    shape: {
      group: Z2,
      S: [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]],
      C: [[1, 0], [-1, 0], [0, 1], [0, -1]],
    },
    start: [[0, 0], [1, 0], [-1, 0], [0, 1]],
    board: latticeBoard(-6, 6, -6, 6),
  },
  {
    name: "free-triangle",
    label: "Free-group triangle  S = {e, a, b}",
    groupKind: "free",
    shape: { group: { kind: "free", k: 2 }, S: ["e", "a", "b"], C: "same" },
    start: ["e", "a", "a a"],
    board: freeBall(5),
  },
];

export function presetByName(name: string): Preset {
  const p = PRESETS.find((q) => q.name === name);
  if (!p) throw new Error(`unknown preset ${name}`);
  return p;
}
