/**
 * Multi-panel snapshot figures: one panel per time slice, real part in
 * red and imaginary part in blue, upper-component rows above
 * lower-component rows, axes in the simulation units (psi in sqrt(m),
 * x in 1/m).
 */
import * as fs from "node:fs";

import { readSnapshots, Snapshot } from "./csv.js";
import { RenderError } from "./errors.js";
import { encodePng } from "./png.js";
import { BLACK, BLUE, GRAY, LIGHT_GRAY, Raster, RED, Rgb, WHITE } from "./raster.js";

export type ComponentSelection = "upper" | "lower" | "both";

export interface PanelSpec {
  snapshotPaths: string[];
  component?: ComponentSelection;
  outputPath: string;
  realColor?: Rgb;
  imagColor?: Rgb;
  /** plot-area size of one panel in pixels */
  panelWidth?: number;
  panelHeight?: number;
}

export interface YLimits {
  upper: number;
  lower: number;
}

export interface PanelPlan {
  component: "upper" | "lower";
  t: number;
  /** plot area in figure pixels */
  rect: { x: number; y: number; width: number; height: number };
  zeroRow: number;
  realPolyline: Array<[number, number]>;
  imagPolyline: Array<[number, number]>;
}

export interface FigurePlan {
  width: number;
  height: number;
  columns: number;
  rowsPerComponent: number;
  components: Array<"upper" | "lower">;
  panels: PanelPlan[];
  yLimits: YLimits;
  xMin: number;
  xMax: number;
}

const MARGIN_LEFT = 46;
const MARGIN_RIGHT = 8;
const MARGIN_TOP = 14;
const MARGIN_BOTTOM = 22;
const LEGEND_HEIGHT = 16;
const DEFAULT_PANEL_W = 170;
const DEFAULT_PANEL_H = 96;

function niceLimit(maxAbs: number): number {
  if (maxAbs <= 0) {
    return 1.0;
  }
  const exponent = Math.floor(Math.log10(maxAbs));
  const scale = Math.pow(10, exponent);
  for (const mantissa of [1, 1.2, 1.5, 2, 2.5, 3, 4, 5, 6, 8, 10]) {
    if (mantissa * scale >= maxAbs) {
      return mantissa * scale;
    }
  }
  return 10 * scale;
}

function componentLimit(snapshots: Snapshot[], component: "upper" | "lower"): number {
  let maxAbs = 0;
  for (const snap of snapshots) {
    const re = component === "upper" ? snap.rePlus : snap.reMinus;
    const im = component === "upper" ? snap.imPlus : snap.imMinus;
    for (let i = 0; i < re.length; i++) {
      maxAbs = Math.max(maxAbs, Math.abs(re[i]), Math.abs(im[i]));
    }
  }
  return niceLimit(maxAbs);
}

export function sharedLimits(snapshots: Snapshot[]): YLimits {
  return {
    upper: componentLimit(snapshots, "upper"),
    lower: componentLimit(snapshots, "lower"),
  };
}

function formatNumber(value: number): string {
  if (value === 0) {
    return "0";
  }
  return String(Number(value.toPrecision(3)));
}

function mapPolyline(
  x: Float64Array,
  y: Float64Array,
  rect: { x: number; y: number; width: number; height: number },
  xMin: number,
  xMax: number,
  yLimit: number,
): Array<[number, number]> {
  const points: Array<[number, number]> = [];
  const spanX = xMax - xMin;
  for (let i = 0; i < x.length; i++) {
    const px = rect.x + Math.round(((x[i] - xMin) / spanX) * (rect.width - 1));
    const frac = (yLimit - y[i]) / (2 * yLimit);
    const py = rect.y + Math.round(frac * (rect.height - 1));
    points.push([px, py]);
  }
  return points;
}

export interface PlanOptions {
  panelWidth?: number;
  panelHeight?: number;
  /** freeze axis limits (e.g. shared across animation frames) */
  yLimits?: YLimits;
}

/** Figure geometry and data->pixel mapping, exposed for tests. */
export function planPanels(
  snapshots: Snapshot[],
  component: ComponentSelection,
  options: PlanOptions = {},
): FigurePlan {
  if (snapshots.length === 0) {
    throw new RenderError("need at least one snapshot");
  }
  const panelWidth = options.panelWidth ?? DEFAULT_PANEL_W;
  const panelHeight = options.panelHeight ?? DEFAULT_PANEL_H;
  const components: Array<"upper" | "lower"> =
    component === "both" ? ["upper", "lower"] : [component];
  const count = snapshots.length;
  const columns = Math.ceil(count / 2);
  const rowsPerComponent = count > columns ? 2 : 1;
  const cellW = MARGIN_LEFT + panelWidth + MARGIN_RIGHT;
  const cellH = MARGIN_TOP + panelHeight + MARGIN_BOTTOM;
  const width = columns * cellW;
  const height = LEGEND_HEIGHT + components.length * rowsPerComponent * cellH;

  const yLimits = options.yLimits ?? sharedLimits(snapshots);
  const xMin = snapshots[0].grid.xMin;
  const xMax = snapshots[0].grid.xMax;

  const panels: PanelPlan[] = [];
  components.forEach((comp, compIndex) => {
    snapshots.forEach((snap, timeIndex) => {
      const row = compIndex * rowsPerComponent + Math.floor(timeIndex / columns);
      const col = timeIndex % columns;
      const rect = {
        x: col * cellW + MARGIN_LEFT,
        y: LEGEND_HEIGHT + row * cellH + MARGIN_TOP,
        width: panelWidth,
        height: panelHeight,
      };
      const limit = comp === "upper" ? yLimits.upper : yLimits.lower;
      const re = comp === "upper" ? snap.rePlus : snap.reMinus;
      const im = comp === "upper" ? snap.imPlus : snap.imMinus;
      panels.push({
        component: comp,
        t: snap.t,
        rect,
        zeroRow: rect.y + Math.round(0.5 * (rect.height - 1)),
        realPolyline: mapPolyline(snap.x, re, rect, xMin, xMax, limit),
        imagPolyline: mapPolyline(snap.x, im, rect, xMin, xMax, limit),
      });
    });
  });
  return {
    width,
    height,
    columns,
    rowsPerComponent,
    components,
    panels,
    yLimits,
    xMin,
    xMax,
  };
}

function drawPanel(
  raster: Raster,
  plan: FigurePlan,
  panel: PanelPlan,
  realColor: Rgb,
  imagColor: Rgb,
): void {
  const { rect } = panel;
  const yLimit =
    panel.component === "upper" ? plan.yLimits.upper : plan.yLimits.lower;
  raster.fillRect(rect.x, rect.y, rect.width, rect.height, WHITE);
  raster.line(rect.x, rect.y, rect.x + rect.width - 1, rect.y, GRAY);
  raster.line(
    rect.x,
    rect.y + rect.height - 1,
    rect.x + rect.width - 1,
    rect.y + rect.height - 1,
    GRAY,
  );
  raster.line(rect.x, rect.y, rect.x, rect.y + rect.height - 1, GRAY);
  raster.line(
    rect.x + rect.width - 1,
    rect.y,
    rect.x + rect.width - 1,
    rect.y + rect.height - 1,
    GRAY,
  );
  raster.line(rect.x, panel.zeroRow, rect.x + rect.width - 1, panel.zeroRow, LIGHT_GRAY);

  const spanX = plan.xMax - plan.xMin;
  const tickCount = 4;
  for (let i = 0; i <= tickCount; i++) {
    const xValue = plan.xMin + (spanX * i) / tickCount;
    const px = rect.x + Math.round(((xValue - plan.xMin) / spanX) * (rect.width - 1));
    raster.line(px, rect.y + rect.height - 1, px, rect.y + rect.height + 2, GRAY);
    const label = formatNumber(xValue);
    raster.text(px - 3 * label.length, rect.y + rect.height + 5, label, BLACK);
  }
  for (const yValue of [yLimit, 0, -yLimit]) {
    const frac = (yLimit - yValue) / (2 * yLimit);
    const py = rect.y + Math.round(frac * (rect.height - 1));
    raster.line(rect.x - 3, py, rect.x, py, GRAY);
    const label = formatNumber(yValue);
    raster.text(rect.x - 5 - 6 * label.length, py - 3, label, BLACK);
  }
  raster.text(rect.x + 3, rect.y - MARGIN_TOP + 3, `t = ${formatNumber(panel.t)}`, BLACK);
  raster.text(
    rect.x + Math.floor(rect.width / 2) - 21,
    rect.y + rect.height + 13,
    "x [1/m]",
    BLACK,
  );
  const tag = panel.component === "upper" ? "psi+" : "psi-";
  raster.text(rect.x - MARGIN_LEFT + 2, rect.y + 2, tag, BLACK);

  raster.polyline(panel.realPolyline, realColor);
  raster.polyline(panel.imagPolyline, imagColor);
}

export interface FigureOptions extends PlanOptions {
  realColor?: Rgb;
  imagColor?: Rgb;
  legend?: string;
}

/** Rasterize snapshots into one figure; shared by panels and animation. */
export function renderFigure(
  snapshots: Snapshot[],
  component: ComponentSelection,
  options: FigureOptions = {},
): { plan: FigurePlan; raster: Raster } {
  const plan = planPanels(snapshots, component, options);
  const raster = new Raster(plan.width, plan.height, WHITE);
  const legend =
    options.legend ?? "red: Re psi   blue: Im psi   psi in sqrt(m)";
  raster.text(4, 4, legend, BLACK);
  for (const panel of plan.panels) {
    drawPanel(raster, plan, panel, options.realColor ?? RED, options.imagColor ?? BLUE);
  }
  return { plan, raster };
}

export interface RenderResult {
  plan: FigurePlan;
  raster: Raster;
  pngBytes: Buffer;
}

export function renderPanels(spec: PanelSpec): RenderResult {
  const snapshots = readSnapshots(spec.snapshotPaths);
  const { plan, raster } = renderFigure(snapshots, spec.component ?? "both", {
    realColor: spec.realColor,
    imagColor: spec.imagColor,
    panelWidth: spec.panelWidth,
    panelHeight: spec.panelHeight,
  });
  const pngBytes = encodePng(raster);
  fs.writeFileSync(spec.outputPath, pngBytes);
  return { plan, raster, pngBytes };
}
