/** CSV/JSON loading with the diagnostics the renderer needs. */

import { readFileSync } from "node:fs";

import Papa from "papaparse";

/** Any problem with the artifacts the renderer was pointed at. */
export class InputError extends Error {}

export interface Table {
  path: string;
  columns: string[];
  rows: Array<Record<string, string>>;
}

function readText(path: string): string {
  try {
    return readFileSync(path, "utf-8");
  } catch {
    throw new InputError(`missing input: ${path}`);
  }
}

/** Parse a header-row CSV; empty or malformed files are errors. */
export function loadTable(path: string): Table {
  const text = readText(path);
  if (text.trim() === "") {
    throw new InputError(`empty input: ${path}`);
  }
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0]!;
    throw new InputError(`unparseable input: ${path} (${first.message})`);
  }
  const columns = parsed.meta.fields ?? [];
  if (parsed.data.length === 0) {
    throw new InputError(`no data rows: ${path}`);
  }
  return { path, columns, rows: parsed.data };
}

export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new InputError(`missing column "${name}" in ${table.path}`);
    }
  }
}

/** Numeric values of one column; blanks and non-numbers are errors. */
export function columnNumbers(table: Table, name: string): number[] {
  requireColumns(table, [name]);
  return table.rows.map((row, i) => {
    const value = Number(row[name]);
    if (!Number.isFinite(value)) {
      throw new InputError(
        `non-numeric "${name}" at data row ${i + 1} in ${table.path}: "${row[name]}"`,
      );
    }
    return value;
  });
}

export function rowsWhere(table: Table, name: string, value: string): Table {
  requireColumns(table, [name]);
  return { ...table, rows: table.rows.filter((row) => row[name] === value) };
}

/** Distinct values of a column in first-appearance order. */
export function distinct(table: Table, name: string): string[] {
  requireColumns(table, [name]);
  const seen: string[] = [];
  for (const row of table.rows) {
    const value = row[name] ?? "";
    if (!seen.includes(value)) {
      seen.push(value);
    }
  }
  return seen;
}

export function loadJson(path: string): Record<string, unknown> {
  const text = readText(path);
  try {
    return JSON.parse(text) as Record<string, unknown>;
  } catch {
    throw new InputError(`unparseable input: ${path} (bad json)`);
  }
}
