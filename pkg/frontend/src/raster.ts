/** Software rasterizer turning a Scene into PNG bytes. */

import { glyphRows } from "./font.js";
import { encodePng } from "./png.js";
import type { CellsOp, PolylineOp, Rgb, Scene, TextOp } from "./scene.js";
import { textAdvance, textWidth } from "./scene.js";

export class Raster {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number, background: Rgb = [255, 255, 255]) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 4);
    this.fillRect(0, 0, width, height, background);
  }

  setPixel(x: number, y: number, [r, g, b]: Rgb): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) {
      return;
    }
    const i = (y * this.width + x) * 4;
    this.data[i] = r;
    this.data[i + 1] = g;
    this.data[i + 2] = b;
    this.data[i + 3] = 255;
  }

  pixel(x: number, y: number): Rgb {
    const i = (y * this.width + x) * 4;
    return [this.data[i]!, this.data[i + 1]!, this.data[i + 2]!];
  }

  fillRect(x: number, y: number, w: number, h: number, color: Rgb): void {
    const x0 = Math.max(0, Math.round(x));
    const y0 = Math.max(0, Math.round(y));
    const x1 = Math.min(this.width, Math.round(x + w));
    const y1 = Math.min(this.height, Math.round(y + h));
    for (let yy = y0; yy < y1; yy++) {
      for (let xx = x0; xx < x1; xx++) {
        this.setPixel(xx, yy, color);
      }
    }
  }

  /** Square stamp used to give strokes their width. */
  private stamp(cx: number, cy: number, width: number, color: Rgb): void {
    const half = Math.floor(width / 2);
    const x = Math.round(cx);
    const y = Math.round(cy);
    for (let dy = -half; dy <= half; dy++) {
      for (let dx = -half; dx <= half; dx++) {
        this.setPixel(x + dx, y + dy, color);
      }
    }
  }

  /**
   * Stroke a polyline, walking each segment in half-pixel steps and
   * gating stamps by the accumulated arc length against the dash
   * pattern (on/off run lengths).
   */
  drawPolyline(op: PolylineOp): void {
    const { points, stroke, width, dash } = op;
    const period = dash ? dash.reduce((a, b) => a + b, 0) : 0;
    let arc = 0;
    const penDown = (s: number): boolean => {
      if (!dash || period <= 0) {
        return true;
      }
      let phase = s % period;
      for (let i = 0; i < dash.length; i++) {
        if (phase < dash[i]!) {
          return i % 2 === 0;
        }
        phase -= dash[i]!;
      }
      return true;
    };
    for (let i = 0; i + 1 < points.length; i++) {
      const [x0, y0] = points[i]!;
      const [x1, y1] = points[i + 1]!;
      const length = Math.hypot(x1 - x0, y1 - y0);
      const steps = Math.max(1, Math.ceil(length * 2));
      for (let k = 0; k <= steps; k++) {
        const t = k / steps;
        if (penDown(arc + t * length)) {
          this.stamp(x0 + t * (x1 - x0), y0 + t * (y1 - y0), width, stroke);
        }
      }
      arc += length;
    }
  }

  drawText(op: TextOp): void {
    const { text, size, color, anchor } = op;
    let x = Math.round(op.x);
    if (anchor === "middle") {
      x -= Math.round(textWidth(text, size) / 2);
    } else if (anchor === "end") {
      x -= textWidth(text, size);
    }
    const top = Math.round(op.y) - 7 * size;
    for (const ch of text) {
      const rows = glyphRows(ch);
      for (let r = 0; r < 7; r++) {
        for (let c = 0; c < 5; c++) {
          if (rows[r]! & (1 << (4 - c))) {
            this.fillRect(x + c * size, top + r * size, size, size, color);
          }
        }
      }
      x += textAdvance(size);
    }
  }

  drawCells(op: CellsOp): void {
    const rows = Math.ceil(op.colors.length / op.columns);
    for (let r = 0; r < rows; r++) {
      for (let c = 0; c < op.columns; c++) {
        const color = op.colors[r * op.columns + c];
        if (color) {
          // overlap by the rounding slack so cell seams stay closed
          this.fillRect(
            op.x0 + c * op.cellW,
            op.y0 + r * op.cellH,
            op.cellW + 1,
            op.cellH + 1,
            color,
          );
        }
      }
    }
  }

  toPng(): Buffer {
    return encodePng(this.width, this.height, this.data);
  }
}

export function renderSceneToPng(scene: Scene): Buffer {
  const raster = new Raster(scene.width, scene.height);
  for (const op of scene.ops) {
    switch (op.kind) {
      case "rect":
        raster.fillRect(op.x, op.y, op.w, op.h, op.fill);
        break;
      case "polyline":
        raster.drawPolyline(op);
        break;
      case "text":
        raster.drawText(op);
        break;
      case "cells":
        raster.drawCells(op);
        break;
    }
  }
  return raster.toPng();
}
