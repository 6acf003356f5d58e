import * as crypto from "node:crypto";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import {
  BLUE,
  RED,
  RenderError,
  decodePng,
  renderPanels,
} from "../src/index.js";
import { writeFigureSet, writeSnapshotFixture, zeroField } from "./fixtures.js";

let dir: string;

beforeEach(() => {
  dir = fs.mkdtempSync(path.join(os.tmpdir(), "plotkit-panels-"));
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

function hash(buffer: Uint8Array): string {
  return crypto.createHash("sha256").update(buffer).digest("hex");
}

describe("renderPanels figure layout", () => {
  it("puts eight snapshots in a 4x4 grid, upper rows above lower rows", () => {
    const paths = writeFigureSet(dir);
    const out = path.join(dir, "fig.png");
    const { plan } = renderPanels({ snapshotPaths: paths, outputPath: out });

    expect(plan.columns).toBe(4);
    expect(plan.rowsPerComponent).toBe(2);
    expect(plan.components).toEqual(["upper", "lower"]);
    expect(plan.panels.length).toBe(16);

    const upperBottom = Math.max(
      ...plan.panels
        .filter((p) => p.component === "upper")
        .map((p) => p.rect.y + p.rect.height),
    );
    const lowerTop = Math.min(
      ...plan.panels.filter((p) => p.component === "lower").map((p) => p.rect.y),
    );
    expect(upperBottom).toBeLessThanOrEqual(lowerTop);

    const png = decodePng(fs.readFileSync(out));
    expect(png.width).toBe(plan.width);
    expect(png.height).toBe(plan.height);
  });

  it("maps the real part to red and the imaginary part to blue pixels", () => {
    // at t = 0 the data is real: the red curve dominates while the blue
    // one is flat; at t = 2 the imaginary part is large
    const paths = writeFigureSet(dir);
    const out = path.join(dir, "fig.png");
    const { plan, raster } = renderPanels({ snapshotPaths: paths, outputPath: out });

    const early = plan.panels.find((p) => p.component === "upper" && p.t === 0)!;
    const late = plan.panels.find((p) => p.component === "upper" && p.t === 2)!;
    const count = (p: typeof early, color: typeof RED) =>
      raster.countColor(p.rect.x, p.rect.y, p.rect.width, p.rect.height, color);
    expect(count(early, RED)).toBeGreaterThan(50);
    expect(count(late, BLUE)).toBeGreaterThan(50);
  });

  it("keeps the blue curve exactly on the zero line at t = 0 (real data)", () => {
    const paths = writeFigureSet(dir);
    const out = path.join(dir, "fig.png");
    const { plan, raster } = renderPanels({ snapshotPaths: paths, outputPath: out });

    for (const panel of plan.panels.filter((p) => p.t === 0)) {
      for (const [, py] of panel.imagPolyline) {
        expect(py).toBe(panel.zeroRow);
      }
      // every blue pixel of that panel sits on the zero row
      const { rect } = panel;
      for (let y = rect.y; y < rect.y + rect.height; y++) {
        const count = raster.countColor(rect.x, y, rect.width, 1, BLUE);
        if (y === panel.zeroRow) {
          expect(count).toBeGreaterThan(0);
        } else {
          expect(count).toBe(0);
        }
      }
      // while the red curve actually moves
      const redRows = new Set(panel.realPolyline.map(([, py]) => py));
      expect(redRows.size).toBeGreaterThan(3);
    }
  });

  it("renders a single zero snapshot as flat lines at zero", () => {
    const csvPath = writeSnapshotFixture(dir, 0, 0, zeroField);
    const out = path.join(dir, "zero.png");
    const { plan } = renderPanels({ snapshotPaths: [csvPath], outputPath: out });
    expect(plan.columns).toBe(1);
    expect(plan.rowsPerComponent).toBe(1);
    for (const panel of plan.panels) {
      for (const [, py] of [...panel.realPolyline, ...panel.imagPolyline]) {
        expect(py).toBe(panel.zeroRow);
      }
    }
  });

  it("honors component selection", () => {
    const paths = writeFigureSet(dir);
    const out = path.join(dir, "upper.png");
    const { plan } = renderPanels({
      snapshotPaths: paths,
      component: "upper",
      outputPath: out,
    });
    expect(plan.components).toEqual(["upper"]);
    expect(plan.panels.length).toBe(8);
  });
});

describe("renderPanels contracts", () => {
  it("is deterministic byte for byte", () => {
    const paths = writeFigureSet(dir);
    const outA = path.join(dir, "a.png");
    const outB = path.join(dir, "b.png");
    const a = renderPanels({ snapshotPaths: paths, outputPath: outA });
    const b = renderPanels({ snapshotPaths: paths, outputPath: outB });
    expect(hash(a.pngBytes)).toBe(hash(b.pngBytes));
    expect(hash(fs.readFileSync(outA))).toBe(hash(fs.readFileSync(outB)));
  });

  it("never modifies its inputs", () => {
    const paths = writeFigureSet(dir);
    const before = paths.map((p) => hash(fs.readFileSync(p)));
    renderPanels({ snapshotPaths: paths, outputPath: path.join(dir, "fig.png") });
    const after = paths.map((p) => hash(fs.readFileSync(p)));
    expect(after).toEqual(before);
  });

  it("rejects an empty snapshot list", () => {
    expect(() =>
      renderPanels({ snapshotPaths: [], outputPath: path.join(dir, "x.png") }),
    ).toThrow(RenderError);
  });

  it("rejects missing snapshot files", () => {
    expect(() =>
      renderPanels({
        snapshotPaths: [path.join(dir, "missing.csv")],
        outputPath: path.join(dir, "x.png"),
      }),
    ).toThrow(/missing snapshot/);
  });

  it("rejects mismatched grids", () => {
    const a = writeSnapshotFixture(dir, 0, 0);
    const b = writeSnapshotFixture(dir, 1, 1, undefined, {
      xMin: -20,
      xMax: 20,
      nPoints: 128,
    });
    expect(() =>
      renderPanels({
        snapshotPaths: [a, b],
        outputPath: path.join(dir, "x.png"),
      }),
    ).toThrow(/grids differ/);
  });
});
