export {
  GridInfo,
  Snapshot,
  SNAPSHOT_HEADER,
  listSnapshotDir,
  readSnapshot,
  readSnapshots,
  sameGrid,
} from "./csv.js";
export { GridMismatchError, RenderError, SnapshotFormatError } from "./errors.js";
export {
  ComponentSelection,
  FigurePlan,
  PanelPlan,
  PanelSpec,
  planPanels,
  renderFigure,
  renderPanels,
  sharedLimits,
} from "./panels.js";
export { AnimationResult, AnimationSpec, renderAnimation } from "./animation.js";
export { decodePng, encodePng } from "./png.js";
export { PALETTE, Raster, RED, BLUE, BLACK, WHITE } from "./raster.js";
