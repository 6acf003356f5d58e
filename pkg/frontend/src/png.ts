import { PNG } from "pngjs";

import { Raster } from "./raster.js";

/** Deterministic PNG bytes (no time-dependent chunks). */
export function encodePng(raster: Raster): Buffer {
  const png = new PNG({ width: raster.width, height: raster.height });
  Buffer.from(raster.data.buffer).copy(png.data);
  return PNG.sync.write(png, { deflateLevel: 9, deflateStrategy: 0 });
}

export function decodePng(bytes: Buffer): PNG {
  return PNG.sync.read(bytes);
}
