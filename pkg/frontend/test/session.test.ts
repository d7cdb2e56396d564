// Scripted end-to-end session against the real engine: load the length-4
// line, perform five legal click-moves, export the trace, replay it with
// the CLI (exit 0), and compare the overlays byte-for-byte against the
// fill / identify CLI output for the same pattern.

import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { CoreApi } from "../src/client";
import { presetByName } from "../src/presets";
import { BoardController, cellKey, exportTrace } from "../src/state";
import { runCli, StdioCoreClient } from "./stdio";

let client: StdioCoreClient;
let controller: BoardController;

beforeAll(() => {
  client = new StdioCoreClient();
  controller = new BoardController(new CoreApi(client), presetByName("triangle"), [
    [0, 0],
    [1, 0],
    [2, 0],
    [3, 0],
  ]);
});

afterAll(() => {
  client.close();
});

describe("scripted playground session", () => {
  it("plays five legal moves from L4 and the CLI replays the export", async () => {
    await controller.load(presetByName("triangle"), [
      [0, 0],
      [1, 0],
      [2, 0],
      [3, 0],
    ]);
    expect(controller.state.banner).toBeNull();

    for (let i = 0; i < 5; i++) {
      const move = controller.state.legalMoves[i % controller.state.legalMoves.length];
      expect(move).toBeDefined();
      const sel = await controller.onCellClick(move.from);
      expect(sel).toBe("selected");
      const res = await controller.onCellClick(move.to);
      expect(res).toBe("moved");
      expect(controller.historyConsistent()).toBe(true);
    }
    expect(controller.state.history).toHaveLength(5);

    const dir = mkdtempSync(join(tmpdir(), "playground-"));
    const tracePath = join(dir, "trace.json");
    const patternPath = join(dir, "l4.json");
    const shapePath = join(dir, "shape.json");
    writeFileSync(tracePath, exportTrace(controller.state));
    writeFileSync(patternPath, JSON.stringify({ pattern: [[0, 0], [1, 0], [2, 0], [3, 0]] }));
    writeFileSync(shapePath, JSON.stringify(controller.state.preset.shape));

    const replayRes = runCli([
      "replay",
      "-i",
      patternPath,
      "-s",
      shapePath,
      "-t",
      tracePath,
    ]);
    expect(replayRes.status).toBe(0);
    const replayed = JSON.parse(replayRes.stdout);
    expect(replayed.legal).toBe(true);
    const endpoint = (replayed.endpoint as number[][]).map((c) => c.join(",")).sort();
    const current = controller.state.pattern.map(cellKey).sort();
    expect(endpoint).toEqual(current);
  });

  it("overlays match the fill and identify CLI output byte for byte", async () => {
    const pattern = controller.state.pattern;
    await controller.refreshOverlays();

    const dir = mkdtempSync(join(tmpdir(), "playground-"));
    const patternPath = join(dir, "p.json");
    const shapePath = join(dir, "shape.json");
    writeFileSync(patternPath, JSON.stringify({ pattern }));
    writeFileSync(shapePath, JSON.stringify(controller.state.preset.shape));

    const fillCli = runCli(["fill", "-i", patternPath, "-s", shapePath]);
    expect(fillCli.status).toBe(0);
    const cliClosure = JSON.stringify(JSON.parse(fillCli.stdout).closure);
    const uiClosure = JSON.stringify(
      (controller.state.overlays.filling as number[][])
        .slice()
        .sort((a, b) => a[0] - b[0] || a[1] - b[1]),
    );
    expect(uiClosure).toBe(cliClosure);

    const identifyCli = runCli(["triangle", "identify", "-i", patternPath]);
    expect(identifyCli.status).toBe(0);
    const cliComponents = JSON.stringify(JSON.parse(identifyCli.stdout).components);
    const uiComponents = JSON.stringify(
      (controller.state.overlays.normalForm as object[]).map((c: any) => ({
        k: c.k,
        n: c.n,
        v: c.v,
      })),
    );
    expect(uiComponents).toBe(cliComponents);
  });

  it("contour overlay matches the CLI on the filled pattern", async () => {
    controller.state.toggles.contour = true;
    await controller.refreshOverlays();
    const contour = controller.state.overlays.contour as number[][];
    expect(contour.length).toBeGreaterThan(0);

    const dir = mkdtempSync(join(tmpdir(), "playground-"));
    const patternPath = join(dir, "p.json");
    const shapePath = join(dir, "shape.json");
    writeFileSync(patternPath, JSON.stringify({ pattern: controller.state.pattern }));
    writeFileSync(shapePath, JSON.stringify(controller.state.preset.shape));
    const fillCli = runCli(["fill", "-i", patternPath, "-s", shapePath]);
    const closurePath = join(dir, "closure.json");
    writeFileSync(
      closurePath,
      JSON.stringify({ pattern: JSON.parse(fillCli.stdout).closure }),
    );
    const contourCli = runCli([
      "contour", "compute", "-i", closurePath, "-s", shapePath, "--corner", "[1,0]",
    ]);
    expect(contourCli.status).toBe(0);
    const cliContour = JSON.stringify(JSON.parse(contourCli.stdout).contour);
    const uiContour = JSON.stringify(
      contour.slice().sort((a, b) => a[0] - b[0] || a[1] - b[1]),
    );
    expect(uiContour).toBe(cliContour);
  });

  it("drives the free-group preset through the same protocol", async () => {
    await controller.load(presetByName("free-triangle"));
    expect(controller.state.banner).toBeNull();
    expect(controller.state.legalMoves.length).toBeGreaterThan(0);
    const move = controller.state.legalMoves[0];
    await controller.onCellClick(move.from);
    const res = await controller.onCellClick(move.to);
    expect(res).toBe("moved");
    expect(controller.historyConsistent()).toBe(true);
  });
});
