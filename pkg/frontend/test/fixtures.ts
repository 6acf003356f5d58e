/**
 * Snapshot-file fixtures in the exact public format the simulator emits:
 * header `x,re_plus,im_plus,re_minus,im_minus,S,V,W` and a
 * `<name>.meta.json` sidecar with t and grid geometry.
 */
import * as fs from "node:fs";
import * as path from "node:path";

export interface FixtureGrid {
  xMin: number;
  xMax: number;
  nPoints: number;
}

export const DEFAULT_GRID: FixtureGrid = { xMin: -40, xMax: 40, nPoints: 128 };

export interface FieldSample {
  rePlus: number;
  imPlus: number;
  reMinus: number;
  imMinus: number;
}

export type FieldAt = (x: number, t: number) => FieldSample;

const sech = (z: number) => 2 * Math.exp(-Math.abs(z)) / (1 + Math.exp(-2 * Math.abs(z)));

/** Localized pulse, purely real at t = 0, rotating in phase afterwards. */
export const pulseField: FieldAt = (x, t) => {
  const envelope = sech(x);
  const odd = Math.tanh(x) * sech(x);
  return {
    rePlus: envelope * Math.cos(0.9 * t),
    imPlus: t === 0 ? 0 : -envelope * Math.sin(0.9 * t),
    reMinus: -odd * Math.cos(0.9 * t),
    imMinus: t === 0 ? 0 : odd * Math.sin(0.9 * t),
  };
};

export const zeroField: FieldAt = () => ({
  rePlus: 0,
  imPlus: 0,
  reMinus: 0,
  imMinus: 0,
});

export function writeSnapshotFixture(
  dir: string,
  index: number,
  t: number,
  field: FieldAt = pulseField,
  grid: FixtureGrid = DEFAULT_GRID,
): string {
  fs.mkdirSync(dir, { recursive: true });
  const dx = (grid.xMax - grid.xMin) / grid.nPoints;
  const lines = ["x,re_plus,im_plus,re_minus,im_minus,S,V,W"];
  for (let j = 0; j < grid.nPoints; j++) {
    const x = grid.xMin + j * dx;
    const f = field(x, t);
    const p2 = f.rePlus ** 2 + f.imPlus ** 2;
    const m2 = f.reMinus ** 2 + f.imMinus ** 2;
    const w = -2 * (f.rePlus * f.reMinus + f.imPlus * f.imMinus);
    const row = [x, f.rePlus, f.imPlus, f.reMinus, f.imMinus, p2 - m2, p2 + m2, w];
    lines.push(row.map((v) => v.toPrecision(17)).join(","));
  }
  const csvPath = path.join(dir, `snapshot_${String(index).padStart(3, "0")}.csv`);
  fs.writeFileSync(csvPath, lines.join("\n") + "\n");
  const metadata = {
    t,
    grid: { x_min: grid.xMin, x_max: grid.xMax, n_points: grid.nPoints },
    units: "psi_plus/psi_minus in sqrt(m); x in 1/m; t in 1/m",
    version: "fixture",
  };
  fs.writeFileSync(`${csvPath}.meta.json`, JSON.stringify(metadata, null, 2) + "\n");
  return csvPath;
}

export const FIG_TIMES = [0, 0.5, 1, 2, 3, 4, 5, 6];

export function writeFigureSet(dir: string, field: FieldAt = pulseField): string[] {
  return FIG_TIMES.map((t, index) => writeSnapshotFixture(dir, index, t, field));
}
