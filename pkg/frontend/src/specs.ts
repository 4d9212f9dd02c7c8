/** The six figure definitions and the per-series style conventions. */

import { join } from "node:path";

import type { Rgb } from "./scene.js";

export type FigureId =
  | "posRepr"
  | "bareFidelity"
  | "method1Fidelity"
  | "wignerQuad"
  | "method2Fidelity"
  | "method2Prob";

export interface LineStyle {
  color: Rgb;
  /** on/off run lengths in px; null is a solid stroke */
  dash: number[] | null;
}

export interface FigureSpec {
  figureId: FigureId;
  /** every listed file must exist and parse before anything renders */
  inputPaths: string[];
  /** series per panel the finished figure must show */
  seriesPerPanel: number;
}

export const SOLID = null;
export const DASHED = [6, 4];
export const DOT_DASHED = [7, 3, 1.5, 3];
export const DOTTED = [1.5, 3];

const RED: Rgb = [198, 33, 40];
const BLUE: Rgb = [38, 70, 180];
const GREEN: Rgb = [22, 128, 70];
const ORANGE: Rgb = [218, 130, 20];

/** Squeezing series keep the captions' keys: solid 1 dB, dashed 5 dB,
 * dot-dashed 10 dB, dotted 20 dB. */
export function dbStyle(db: number): LineStyle {
  switch (db) {
    case 1:
      return { color: RED, dash: SOLID };
    case 5:
      return { color: BLUE, dash: DASHED };
    case 10:
      return { color: GREEN, dash: DOT_DASHED };
    case 20:
      return { color: ORANGE, dash: DOTTED };
    default:
      return { color: [90, 90, 90], dash: SOLID };
  }
}

/** Gate-strength series cycle the same styles in column order. */
export function strengthStyle(index: number): LineStyle {
  const styles: LineStyle[] = [
    { color: RED, dash: SOLID },
    { color: BLUE, dash: DASHED },
    { color: GREEN, dash: DOT_DASHED },
    { color: ORANGE, dash: DOTTED },
  ];
  return styles[index % styles.length]!;
}

export function figureSpecs(outDir: string): FigureSpec[] {
  const p = (name: string): string => join(outDir, name);
  return [
    {
      figureId: "posRepr",
      inputPaths: [p("gate_function.csv")],
      seriesPerPanel: 2,
    },
    {
      figureId: "bareFidelity",
      inputPaths: [p("bare_fock.csv"), p("bare_coherent.csv")],
      seriesPerPanel: 3,
    },
    {
      figureId: "method1Fidelity",
      inputPaths: [p("method1_fock.csv"), p("method1_coherent.csv")],
      seriesPerPanel: 4,
    },
    {
      figureId: "wignerQuad",
      inputPaths: [
        p("wigner_target.csv"),
        p("wigner_bare.csv"),
        p("wigner_method1.csv"),
        p("wigner_method2.csv"),
        p("wigner_summary.json"),
      ],
      seriesPerPanel: 1,
    },
    {
      figureId: "method2Fidelity",
      inputPaths: [p("method2_fock.csv"), p("method2_coherent.csv")],
      seriesPerPanel: 4,
    },
    {
      figureId: "method2Prob",
      inputPaths: [p("method2_fock.csv")],
      seriesPerPanel: 4,
    },
  ];
}
