/**
 * Device-independent figure description.
 *
 * Figure builders emit a flat list of drawing operations in pixel
 * coordinates (y down); the SVG writer and the PNG rasterizer both
 * consume it, so the two outputs always show the same geometry.
 */

export type Rgb = [number, number, number];

export interface RectOp {
  kind: "rect";
  x: number;
  y: number;
  w: number;
  h: number;
  fill: Rgb;
}

export interface PolylineOp {
  kind: "polyline";
  points: Array<[number, number]>;
  stroke: Rgb;
  width: number;
  /** on/off run lengths in px, or null for a solid stroke */
  dash: number[] | null;
  cssClass?: string;
}

export interface TextOp {
  kind: "text";
  x: number;
  /** baseline */
  y: number;
  text: string;
  /** integer scale of the 5x7 glyph grid */
  size: number;
  color: Rgb;
  anchor: "start" | "middle" | "end";
}

/** Row-major grid of filled cells, e.g. a Wigner heatmap. */
export interface CellsOp {
  kind: "cells";
  x0: number;
  y0: number;
  cellW: number;
  cellH: number;
  columns: number;
  colors: Rgb[];
}

export type SceneOp = RectOp | PolylineOp | TextOp | CellsOp;

export interface Scene {
  width: number;
  height: number;
  ops: SceneOp[];
}

export const WHITE: Rgb = [255, 255, 255];
export const BLACK: Rgb = [30, 30, 30];
export const AXIS: Rgb = [60, 60, 60];

/** Glyph advance in px at a given text size. */
export function textAdvance(size: number): number {
  return 6 * size;
}

/** Rendered width of a string in px. */
export function textWidth(text: string, size: number): number {
  return text.length * textAdvance(size);
}
