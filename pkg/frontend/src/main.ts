import { CoreApi, HttpCoreClient } from "./client";
import { PRESETS, presetByName } from "./presets";
import { BoardController, exportTrace } from "./state";
import { draw, hitTest, latticeLayout, normalFormBadge, treeLayout, Layout } from "./render";

const canvas = document.getElementById("board") as HTMLCanvasElement;
const presetSelect = document.getElementById("preset") as HTMLSelectElement;
const badge = document.getElementById("badge") as HTMLSpanElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const movesLabel = document.getElementById("moves") as HTMLSpanElement;

const api = new CoreApi(new HttpCoreClient("/api"));
const controller = new BoardController(api, PRESETS[0]);
let layout: Layout = latticeLayout(true);

function layoutFor(name: string): Layout {
  if (name === "free-triangle") return treeLayout(5);
  return latticeLayout(name === "triangle");
}

function repaint() {
  draw(canvas, controller.state, layout);
  badge.textContent = normalFormBadge(controller.state);
  movesLabel.textContent = `${controller.state.history.length} moves`;
  banner.textContent = controller.state.banner ?? "";
  banner.style.display = controller.state.banner ? "block" : "none";
}

for (const p of PRESETS) {
  const opt = document.createElement("option");
  opt.value = p.name;
  opt.textContent = p.label;
  presetSelect.appendChild(opt);
}

presetSelect.addEventListener("change", async () => {
  const preset = presetByName(presetSelect.value);
  layout = layoutFor(preset.name);
  await controller.load(preset);
  repaint();
});

canvas.addEventListener("click", async (ev) => {
  const rect = canvas.getBoundingClientRect();
  const cell = hitTest(controller.state, layout, ev.clientX - rect.left, ev.clientY - rect.top);
  if (cell !== null) {
    await controller.onCellClick(cell);
    repaint();
  }
});

(document.getElementById("undo") as HTMLButtonElement).addEventListener("click", async () => {
  await controller.undo();
  repaint();
});

(document.getElementById("redo") as HTMLButtonElement).addEventListener("click", async () => {
  await controller.redo();
  repaint();
});

for (const toggle of ["filling", "hull", "contour", "normalForm"] as const) {
  const box = document.getElementById(`toggle-${toggle}`) as HTMLInputElement;
  box.checked = controller.state.toggles[toggle];
  box.addEventListener("change", async () => {
    controller.state.toggles[toggle] = box.checked;
    await controller.refreshOverlays();
    repaint();
  });
}

(document.getElementById("export") as HTMLButtonElement).addEventListener("click", () => {
  const blob = new Blob([exportTrace(controller.state)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "trace.json";
  a.click();
  URL.revokeObjectURL(a.href);
});

controller.load(PRESETS[0]).then(repaint);
