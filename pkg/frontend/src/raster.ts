/**
 * Minimal deterministic software rasterizer: an RGBA pixel buffer with
 * lines, rectangles, and bitmap text. No antialiasing, so every drawn
 * pixel carries one of the palette colors exactly.
 */
import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from "./font.js";

export type Rgb = readonly [number, number, number];

export const WHITE: Rgb = [255, 255, 255];
export const BLACK: Rgb = [0, 0, 0];
export const RED: Rgb = [220, 30, 30];
export const BLUE: Rgb = [30, 60, 220];
export const GRAY: Rgb = [150, 150, 150];
export const LIGHT_GRAY: Rgb = [220, 220, 220];

export const PALETTE: Rgb[] = [WHITE, BLACK, RED, BLUE, GRAY, LIGHT_GRAY];

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8ClampedArray;

  constructor(width: number, height: number, background: Rgb = WHITE) {
    this.width = width;
    this.height = height;
    this.data = new Uint8ClampedArray(width * height * 4);
    this.fillRect(0, 0, width, height, background);
  }

  set(x: number, y: number, color: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const offset = (y * this.width + x) * 4;
    this.data[offset] = color[0];
    this.data[offset + 1] = color[1];
    this.data[offset + 2] = color[2];
    this.data[offset + 3] = 255;
  }

  get(x: number, y: number): Rgb {
    const offset = (y * this.width + x) * 4;
    return [this.data[offset], this.data[offset + 1], this.data[offset + 2]];
  }

  fillRect(x: number, y: number, w: number, h: number, color: Rgb): void {
    for (let j = y; j < y + h; j++) {
      for (let i = x; i < x + w; i++) {
        this.set(i, j, color);
      }
    }
  }

  line(x0: number, y0: number, x1: number, y1: number, color: Rgb): void {
    // integer Bresenham
    let cx = Math.round(x0);
    let cy = Math.round(y0);
    const ex = Math.round(x1);
    const ey = Math.round(y1);
    const dx = Math.abs(ex - cx);
    const dy = -Math.abs(ey - cy);
    const sx = cx < ex ? 1 : -1;
    const sy = cy < ey ? 1 : -1;
    let err = dx + dy;
    for (;;) {
      this.set(cx, cy, color);
      if (cx === ex && cy === ey) {
        break;
      }
      const doubled = 2 * err;
      if (doubled >= dy) {
        err += dy;
        cx += sx;
      }
      if (doubled <= dx) {
        err += dx;
        cy += sy;
      }
    }
  }

  polyline(points: ReadonlyArray<readonly [number, number]>, color: Rgb): void {
    for (let i = 1; i < points.length; i++) {
      this.line(points[i - 1][0], points[i - 1][1], points[i][0], points[i][1], color);
    }
  }

  text(x: number, y: number, content: string, color: Rgb, scale = 1): void {
    let penX = x;
    for (const char of content) {
      const glyph = glyphFor(char);
      for (let row = 0; row < GLYPH_HEIGHT; row++) {
        for (let col = 0; col < GLYPH_WIDTH; col++) {
          if ((glyph[row] >> (GLYPH_WIDTH - 1 - col)) & 1) {
            for (let dy = 0; dy < scale; dy++) {
              for (let dx = 0; dx < scale; dx++) {
                this.set(penX + col * scale + dx, y + row * scale + dy, color);
              }
            }
          }
        }
      }
      penX += (GLYPH_WIDTH + 1) * scale;
    }
  }

  /** Count pixels of an exact color inside a rectangle. */
  countColor(x: number, y: number, w: number, h: number, color: Rgb): number {
    let count = 0;
    for (let j = y; j < y + h; j++) {
      for (let i = x; i < x + w; i++) {
        const [r, g, b] = this.get(i, j);
        if (r === color[0] && g === color[1] && b === color[2]) {
          count += 1;
        }
      }
    }
    return count;
  }
}
