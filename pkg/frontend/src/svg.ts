/** Scene-to-SVG writer (plain string assembly, no DOM). */

import { encodePng } from "./png.js";
import type { CellsOp, Rgb, Scene } from "./scene.js";

function num(x: number): string {
  const rounded = Math.round(x * 100) / 100;
  return Object.is(rounded, -0) ? "0" : String(rounded);
}

function color([r, g, b]: Rgb): string {
  return `rgb(${r},${g},${b})`;
}

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/**
 * Heatmaps are embedded as one-pixel-per-cell PNGs stretched to the
 * cell geometry; everything else in the figure stays vector.
 */
function cellsImage(op: CellsOp): string {
  const rows = Math.ceil(op.colors.length / op.columns);
  const rgba = new Uint8Array(op.columns * rows * 4);
  for (let i = 0; i < op.colors.length; i++) {
    const [r, g, b] = op.colors[i]!;
    rgba[i * 4] = r;
    rgba[i * 4 + 1] = g;
    rgba[i * 4 + 2] = b;
    rgba[i * 4 + 3] = 255;
  }
  const href = `data:image/png;base64,${encodePng(op.columns, rows, rgba).toString("base64")}`;
  const w = num(op.columns * op.cellW);
  const h = num(rows * op.cellH);
  return (
    `<image x="${num(op.x0)}" y="${num(op.y0)}" width="${w}" height="${h}" ` +
    `preserveAspectRatio="none" image-rendering="pixelated" href="${href}"/>`
  );
}

export function renderSceneToSvg(scene: Scene): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.width}" ` +
      `height="${scene.height}" viewBox="0 0 ${scene.width} ${scene.height}">`,
    `<rect x="0" y="0" width="${scene.width}" height="${scene.height}" fill="rgb(255,255,255)"/>`,
  ];
  for (const op of scene.ops) {
    switch (op.kind) {
      case "rect":
        parts.push(
          `<rect x="${num(op.x)}" y="${num(op.y)}" width="${num(op.w)}" ` +
            `height="${num(op.h)}" fill="${color(op.fill)}"/>`,
        );
        break;
      case "polyline": {
        const points = op.points.map(([x, y]) => `${num(x)},${num(y)}`).join(" ");
        const dash = op.dash ? ` stroke-dasharray="${op.dash.map(num).join(" ")}"` : "";
        const cls = op.cssClass ? ` class="${op.cssClass}"` : "";
        parts.push(
          `<polyline${cls} points="${points}" fill="none" stroke="${color(op.stroke)}" ` +
            `stroke-width="${num(op.width)}"${dash}/>`,
        );
        break;
      }
      case "text":
        parts.push(
          `<text x="${num(op.x)}" y="${num(op.y)}" font-family="monospace" ` +
            `font-size="${8 * op.size}" fill="${color(op.color)}" ` +
            `text-anchor="${op.anchor}">${escapeText(op.text)}</text>`,
        );
        break;
      case "cells":
        parts.push(cellsImage(op));
        break;
    }
  }
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
