import * as crypto from "node:crypto";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { RenderError, renderAnimation } from "../src/index.js";
import { writeFigureSet, writeSnapshotFixture } from "./fixtures.js";

let dir: string;

beforeEach(() => {
  dir = fs.mkdtempSync(path.join(os.tmpdir(), "plotkit-anim-"));
});

afterEach(() => {
  fs.rmSync(dir, { recursive: true, force: true });
});

/** Graphic-control extensions (one per frame) with delays in centiseconds. */
function gifFrameDelays(bytes: Uint8Array): number[] {
  const delays: number[] = [];
  for (let i = 0; i + 7 < bytes.length; i++) {
    if (bytes[i] === 0x21 && bytes[i + 1] === 0xf9 && bytes[i + 2] === 0x04) {
      delays.push(bytes[i + 4] | (bytes[i + 5] << 8));
    }
  }
  return delays;
}

describe("renderAnimation", () => {
  it("turns 8 snapshots at 2 fps into a 4-second animation", () => {
    writeFigureSet(dir);
    const out = path.join(dir, "anim.gif");
    const result = renderAnimation({ source: dir, outputPath: out, framesPerSecond: 2 });

    expect(result.frameCount).toBe(8);
    const bytes = fs.readFileSync(out);
    expect(bytes.subarray(0, 6).toString("ascii")).toBe("GIF89a");
    const delays = gifFrameDelays(bytes);
    expect(delays.length).toBe(8);
    expect(delays.every((d) => d === 50)).toBe(true);
    const totalSeconds = delays.reduce((a, b) => a + b, 0) / 100;
    expect(totalSeconds).toBe(4);
  });

  it("accepts explicit paths in any order and plays frames in time order", () => {
    const paths = writeFigureSet(dir);
    const shuffled = [paths[3], paths[0], paths[7], paths[1], paths[2], paths[6], paths[4], paths[5]];
    const out = path.join(dir, "anim.gif");
    const result = renderAnimation({ source: shuffled, outputPath: out });
    expect(result.frameCount).toBe(8);
  });

  it("requires at least two snapshots", () => {
    writeSnapshotFixture(dir, 0, 0);
    expect(() =>
      renderAnimation({ source: dir, outputPath: path.join(dir, "x.gif") }),
    ).toThrow(RenderError);
  });

  it("is deterministic byte for byte", () => {
    writeFigureSet(dir);
    const a = renderAnimation({ source: dir, outputPath: path.join(dir, "a.gif") });
    const b = renderAnimation({ source: dir, outputPath: path.join(dir, "b.gif") });
    const hash = (x: Uint8Array) => crypto.createHash("sha256").update(x).digest("hex");
    expect(hash(a.bytes)).toBe(hash(b.bytes));
  });

  it("rejects a non-positive frame rate", () => {
    writeFigureSet(dir);
    expect(() =>
      renderAnimation({
        source: dir,
        outputPath: path.join(dir, "x.gif"),
        framesPerSecond: 0,
      }),
    ).toThrow(/positive/);
  });
});
