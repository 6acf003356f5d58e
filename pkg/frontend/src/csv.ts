/**
 * Reader for the simulator's public snapshot format: a CSV with header
 * `x,re_plus,im_plus,re_minus,im_minus,S,V,W` plus a `<name>.meta.json`
 * sidecar carrying at least { t, grid: { x_min, x_max, n_points } }.
 */
import * as fs from "node:fs";
import * as path from "node:path";

import { GridMismatchError, SnapshotFormatError } from "./errors.js";

export const SNAPSHOT_HEADER = "x,re_plus,im_plus,re_minus,im_minus,S,V,W";

export interface GridInfo {
  xMin: number;
  xMax: number;
  nPoints: number;
}

export interface Snapshot {
  t: number;
  grid: GridInfo;
  x: Float64Array;
  rePlus: Float64Array;
  imPlus: Float64Array;
  reMinus: Float64Array;
  imMinus: Float64Array;
  units?: string;
  sourcePath: string;
}

function sidecarPath(csvPath: string): string {
  return `${csvPath}.meta.json`;
}

function readSidecar(csvPath: string): { t: number; grid: GridInfo; units?: string } {
  const metaPath = sidecarPath(csvPath);
  if (!fs.existsSync(metaPath)) {
    throw new SnapshotFormatError(`missing metadata sidecar ${metaPath}`);
  }
  let parsed: unknown;
  try {
    parsed = JSON.parse(fs.readFileSync(metaPath, "utf8"));
  } catch (err) {
    throw new SnapshotFormatError(`unreadable sidecar ${metaPath}: ${String(err)}`);
  }
  const meta = parsed as {
    t?: unknown;
    units?: unknown;
    grid?: { x_min?: unknown; x_max?: unknown; n_points?: unknown };
  };
  const grid = meta.grid;
  if (
    typeof meta.t !== "number" ||
    grid === undefined ||
    typeof grid.x_min !== "number" ||
    typeof grid.x_max !== "number" ||
    typeof grid.n_points !== "number"
  ) {
    throw new SnapshotFormatError(`malformed metadata in ${metaPath}`);
  }
  return {
    t: meta.t,
    grid: { xMin: grid.x_min, xMax: grid.x_max, nPoints: grid.n_points },
    units: typeof meta.units === "string" ? meta.units : undefined,
  };
}

export function readSnapshot(csvPath: string): Snapshot {
  if (!fs.existsSync(csvPath)) {
    throw new SnapshotFormatError(`missing snapshot file ${csvPath}`);
  }
  const meta = readSidecar(csvPath);
  const body = fs.readFileSync(csvPath, "utf8");
  const lines = body.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop();
  }
  if (lines.length === 0 || lines[0] !== SNAPSHOT_HEADER) {
    throw new SnapshotFormatError(
      `header mismatch in ${csvPath}: expected "${SNAPSHOT_HEADER}"`,
    );
  }
  const n = meta.grid.nPoints;
  if (lines.length - 1 !== n) {
    throw new SnapshotFormatError(
      `${csvPath}: expected ${n} data rows, found ${lines.length - 1}`,
    );
  }
  const columns = [0, 1, 2, 3, 4].map(() => new Float64Array(n));
  for (let i = 0; i < n; i++) {
    const parts = lines[i + 1].split(",");
    if (parts.length !== 8) {
      throw new SnapshotFormatError(
        `${csvPath}: row ${i + 2} has ${parts.length} columns, expected 8`,
      );
    }
    for (let c = 0; c < 5; c++) {
      const value = Number(parts[c]);
      if (!Number.isFinite(value)) {
        throw new SnapshotFormatError(
          `${csvPath}: non-finite value "${parts[c]}" at row ${i + 2}`,
        );
      }
      columns[c][i] = value;
    }
  }
  return {
    t: meta.t,
    grid: meta.grid,
    x: columns[0],
    rePlus: columns[1],
    imPlus: columns[2],
    reMinus: columns[3],
    imMinus: columns[4],
    units: meta.units,
    sourcePath: csvPath,
  };
}

export function sameGrid(a: GridInfo, b: GridInfo): boolean {
  return a.xMin === b.xMin && a.xMax === b.xMax && a.nPoints === b.nPoints;
}

/** Read several snapshots and require one common grid. */
export function readSnapshots(paths: string[]): Snapshot[] {
  const snapshots = paths.map(readSnapshot);
  for (const snap of snapshots.slice(1)) {
    if (!sameGrid(snap.grid, snapshots[0].grid)) {
      throw new GridMismatchError(
        `snapshot grids differ: ${snapshots[0].sourcePath} vs ${snap.sourcePath}`,
      );
    }
  }
  return snapshots;
}

/** All snapshot CSVs in a directory, sorted by their recorded time. */
export function listSnapshotDir(dir: string): string[] {
  if (!fs.existsSync(dir) || !fs.statSync(dir).isDirectory()) {
    throw new SnapshotFormatError(`not a directory: ${dir}`);
  }
  const files = fs
    .readdirSync(dir)
    .filter((name) => name.startsWith("snapshot_") && name.endsWith(".csv"))
    .map((name) => path.join(dir, name));
  const withTimes = files.map((file) => ({ file, t: readSidecar(file).t }));
  withTimes.sort((a, b) => a.t - b.t || a.file.localeCompare(b.file));
  return withTimes.map((entry) => entry.file);
}
