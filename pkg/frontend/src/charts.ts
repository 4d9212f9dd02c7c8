/** Line-figure scene builder: panels, axes, legends, series styles. */

import { scaleLinear, scaleLog } from "d3";

import type { LineStyle } from "./specs.js";
import type { Rgb, Scene, SceneOp } from "./scene.js";
import { AXIS, BLACK, textWidth } from "./scene.js";

export interface Series {
  key: string;
  label: string;
  x: number[];
  y: number[];
  style: LineStyle;
}

export interface PanelDef {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  /** fixed y range; derived from the data when omitted */
  yDomain?: [number, number];
  yLog?: boolean;
}

const PANEL_W = 340;
const PANEL_H = 330;
const TITLE_H = 28;
const MARGIN = { left: 58, right: 16, top: 26, bottom: 48 };

function fmtTick(value: number): string {
  if (value === 0) {
    return "0";
  }
  const magnitude = Math.abs(value);
  if (magnitude >= 10000 || magnitude < 0.001) {
    const exp = Math.floor(Math.log10(magnitude));
    const mant = value / 10 ** exp;
    const head = Math.abs(mant - 1) < 1e-9 ? (value < 0 ? "-1" : "1") : mant.toPrecision(2);
    return `${head}e${exp}`;
  }
  return String(Math.round(value * 1000) / 1000);
}

/**
 * Split a series into runs inside the y domain, interpolating the
 * boundary crossing so clipped curves still touch the frame.
 */
function clipRuns(
  xs: number[],
  ys: number[],
  lo: number,
  hi: number,
): Array<Array<[number, number]>> {
  const runs: Array<Array<[number, number]>> = [];
  let current: Array<[number, number]> = [];
  const cross = (i: number, j: number, bound: number): [number, number] => {
    const t = (bound - ys[i]!) / (ys[j]! - ys[i]!);
    return [xs[i]! + t * (xs[j]! - xs[i]!), bound];
  };
  for (let i = 0; i < xs.length; i++) {
    const inside = ys[i]! >= lo && ys[i]! <= hi;
    const prevInside = i > 0 && ys[i - 1]! >= lo && ys[i - 1]! <= hi;
    if (inside) {
      if (i > 0 && !prevInside) {
        current.push(cross(i - 1, i, ys[i - 1]! > hi ? hi : lo));
      }
      current.push([xs[i]!, ys[i]!]);
    } else if (prevInside) {
      current.push(cross(i - 1, i, ys[i]! > hi ? hi : lo));
      runs.push(current);
      current = [];
    }
  }
  if (current.length > 0) {
    runs.push(current);
  }
  return runs;
}

function panelOps(panel: PanelDef, originX: number, originY: number): SceneOp[] {
  const ops: SceneOp[] = [];
  const plot = {
    x: originX + MARGIN.left,
    y: originY + MARGIN.top,
    w: PANEL_W - MARGIN.left - MARGIN.right,
    h: PANEL_H - MARGIN.top - MARGIN.bottom,
  };

  const allX = panel.series.flatMap((s) => s.x);
  const allY = panel.series.flatMap((s) => s.y);
  const xScale = scaleLinear()
    .domain([Math.min(...allX), Math.max(...allX)])
    .range([plot.x, plot.x + plot.w]);
  let yDomain = panel.yDomain;
  let yScale;
  if (panel.yLog) {
    const positive = allY.filter((v) => v > 0);
    yDomain = yDomain ?? [Math.min(...positive), Math.max(...positive)];
    yScale = scaleLog()
      .domain(yDomain)
      .range([plot.y + plot.h, plot.y])
      .nice();
  } else {
    yDomain = yDomain ?? [Math.min(...allY), Math.max(...allY)];
    yScale = scaleLinear()
      .domain(yDomain)
      .range([plot.y + plot.h, plot.y])
      .nice();
  }
  const [yLo, yHi] = yScale.domain() as [number, number];

  // frame
  ops.push({
    kind: "polyline",
    points: [
      [plot.x, plot.y],
      [plot.x + plot.w, plot.y],
      [plot.x + plot.w, plot.y + plot.h],
      [plot.x, plot.y + plot.h],
      [plot.x, plot.y],
    ],
    stroke: AXIS,
    width: 1,
    dash: null,
  });

  for (const tick of xScale.ticks(6)) {
    const tx = xScale(tick);
    ops.push({
      kind: "polyline",
      points: [
        [tx, plot.y + plot.h],
        [tx, plot.y + plot.h + 4],
      ],
      stroke: AXIS,
      width: 1,
      dash: null,
    });
    ops.push({
      kind: "text",
      x: tx,
      y: plot.y + plot.h + 16,
      text: fmtTick(tick),
      size: 1,
      color: BLACK,
      anchor: "middle",
    });
  }
  let yTicks = (yScale.ticks as (n?: number) => number[])(6);
  if (panel.yLog) {
    yTicks = yTicks.filter((t) => {
      const l = Math.log10(t);
      return Math.abs(l - Math.round(l)) < 1e-9;
    });
    const step = Math.max(1, Math.ceil(yTicks.length / 7));
    yTicks = yTicks.filter((_, i) => i % step === 0);
  }
  for (const tick of yTicks) {
    const ty = yScale(tick);
    ops.push({
      kind: "polyline",
      points: [
        [plot.x - 4, ty],
        [plot.x, ty],
      ],
      stroke: AXIS,
      width: 1,
      dash: null,
    });
    ops.push({
      kind: "text",
      x: plot.x - 7,
      y: ty + 3,
      text: fmtTick(tick),
      size: 1,
      color: BLACK,
      anchor: "end",
    });
  }

  ops.push({
    kind: "text",
    x: originX + PANEL_W / 2,
    y: plot.y - 8,
    text: panel.title,
    size: 1,
    color: BLACK,
    anchor: "middle",
  });
  ops.push({
    kind: "text",
    x: plot.x + plot.w / 2,
    y: plot.y + plot.h + 34,
    text: panel.xLabel,
    size: 1,
    color: BLACK,
    anchor: "middle",
  });
  ops.push({
    kind: "text",
    x: originX + 6,
    y: plot.y - 8,
    text: panel.yLabel,
    size: 1,
    color: BLACK,
    anchor: "start",
  });

  for (const series of panel.series) {
    const lo = panel.yLog ? Math.max(yLo, Number.MIN_VALUE) : yLo;
    for (const run of clipRuns(series.x, series.y, lo, yHi)) {
      if (run.length < 2) {
        continue;
      }
      ops.push({
        kind: "polyline",
        points: run.map(([x, y]) => [xScale(x), yScale(y)] as [number, number]),
        stroke: series.style.color,
        width: 2,
        dash: series.style.dash,
        cssClass: `series s-${series.key}`,
      });
    }
  }

  // legend, top-right inside the frame
  const legendW = Math.max(...panel.series.map((s) => textWidth(s.label, 1))) + 30;
  panel.series.forEach((series, i) => {
    const ly = plot.y + 10 + i * 13;
    const lx = plot.x + plot.w - legendW;
    ops.push({
      kind: "polyline",
      points: [
        [lx, ly],
        [lx + 22, ly],
      ],
      stroke: series.style.color,
      width: 2,
      dash: series.style.dash,
    });
    ops.push({
      kind: "text",
      x: lx + 27,
      y: ly + 3,
      text: series.label,
      size: 1,
      color: BLACK,
      anchor: "start",
    });
  });

  return ops;
}

/** Assemble a titled row of line panels into one scene. */
export function lineFigureScene(title: string, panels: PanelDef[]): Scene {
  const width = PANEL_W * panels.length;
  const height = TITLE_H + PANEL_H;
  const ops: SceneOp[] = [
    {
      kind: "text",
      x: width / 2,
      y: 19,
      text: title,
      size: 2,
      color: BLACK,
      anchor: "middle",
    },
  ];
  panels.forEach((panel, i) => {
    ops.push(...panelOps(panel, i * PANEL_W, TITLE_H));
  });
  return { width, height, ops };
}

export const LINE_COLORS: Record<string, Rgb> = {
  target: [30, 30, 30],
  polynomial: [198, 33, 40],
};
