/**
 * GIF animations: one frame per snapshot in time order, axis limits
 * shared across all frames so the motion reads true.
 */
import * as fs from "node:fs";

import * as gifencModule from "gifenc";

import { listSnapshotDir, readSnapshots } from "./csv.js";
import { RenderError } from "./errors.js";
import { ComponentSelection, renderFigure, sharedLimits } from "./panels.js";
import { PALETTE, Raster } from "./raster.js";

// the CJS bundle surfaces at different nesting depths depending on the
// module interop in play; unwrap until GIFEncoder appears
function resolveGifenc(candidate: unknown): typeof gifencModule {
  let current = candidate as Record<string, unknown>;
  for (let depth = 0; depth < 3; depth++) {
    if (typeof current?.GIFEncoder === "function") {
      return current as unknown as typeof gifencModule;
    }
    current = current?.default as Record<string, unknown>;
  }
  throw new Error("could not resolve the gifenc encoder export");
}

const { GIFEncoder } = resolveGifenc(gifencModule);

export interface AnimationSpec {
  /** directory of snapshot_*.csv files, or explicit paths */
  source: string | string[];
  outputPath: string;
  framesPerSecond?: number;
  component?: ComponentSelection;
}

function paletteIndexMap(): Map<number, number> {
  const map = new Map<number, number>();
  PALETTE.forEach((color, index) => {
    map.set((color[0] << 16) | (color[1] << 8) | color[2], index);
  });
  return map;
}

function toIndexed(raster: Raster, lookup: Map<number, number>): Uint8Array {
  const out = new Uint8Array(raster.width * raster.height);
  for (let i = 0; i < out.length; i++) {
    const offset = i * 4;
    const key =
      (raster.data[offset] << 16) |
      (raster.data[offset + 1] << 8) |
      raster.data[offset + 2];
    const index = lookup.get(key);
    if (index === undefined) {
      throw new RenderError("frame contains a color outside the fixed palette");
    }
    out[i] = index;
  }
  return out;
}

export interface AnimationResult {
  frameCount: number;
  delayMs: number;
  width: number;
  height: number;
  bytes: Uint8Array;
}

export function renderAnimation(spec: AnimationSpec): AnimationResult {
  const paths = Array.isArray(spec.source) ? spec.source : listSnapshotDir(spec.source);
  if (paths.length < 2) {
    throw new RenderError(
      `need at least 2 snapshots for an animation, got ${paths.length}`,
    );
  }
  const snapshots = readSnapshots(paths);
  snapshots.sort((a, b) => a.t - b.t);
  const component = spec.component ?? "both";
  const fps = spec.framesPerSecond ?? 2;
  if (!(fps > 0)) {
    throw new RenderError("framesPerSecond must be positive");
  }
  const delayMs = 1000 / fps;

  const limits = sharedLimits(snapshots);
  const lookup = paletteIndexMap();
  const palette = PALETTE.map((c) => [c[0], c[1], c[2]]);
  const encoder = GIFEncoder();
  let width = 0;
  let height = 0;
  for (const snapshot of snapshots) {
    const { raster } = renderFigure([snapshot], component, {
      yLimits: limits,
      panelWidth: 240,
      panelHeight: 120,
      legend: `t = ${Number(snapshot.t.toPrecision(6))}   red: Re   blue: Im`,
    });
    width = raster.width;
    height = raster.height;
    encoder.writeFrame(toIndexed(raster, lookup), raster.width, raster.height, {
      palette,
      delay: delayMs,
    });
  }
  encoder.finish();
  const bytes = encoder.bytes();
  fs.writeFileSync(spec.outputPath, bytes);
  return { frameCount: snapshots.length, delayMs, width, height, bytes };
}
