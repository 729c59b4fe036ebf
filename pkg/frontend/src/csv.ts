import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** Bad or malformed input; the CLI maps this to exit code 2. */
export class InputError extends Error {}

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

/** A rectangular grid of values keyed by a row axis and a column axis. */
export interface Matrix {
  rowName: string;
  colName: string;
  rowValues: number[];
  colValues: number[];
  /** values[i][j] for rowValues[i], colValues[j]; NaN marks masked cells */
  values: number[][];
}

export function readTable(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf-8");
  } catch {
    throw new InputError(`cannot read ${path}`);
  }
  const parsed = Papa.parse<Record<string, string>>(text, {
    header: true,
    skipEmptyLines: true,
  });
  const columns = parsed.meta.fields ?? [];
  if (columns.length === 0) {
    throw new InputError(`${path}: no header row`);
  }
  return { columns, rows: parsed.data };
}

export function requireColumns(table: Table, names: string[], path: string): void {
  const missing = names.filter((n) => !table.columns.includes(n));
  if (missing.length > 0) {
    throw new InputError(`${path}: missing column(s) ${missing.join(", ")}`);
  }
}

export function numericColumn(table: Table, name: string): number[] {
  // the solver writes "nan" for masked cells; Number("nan") is already NaN
  return table.rows.map((r) => Number(r[name]));
}

/** True for the solver's wide map format: eta_s label plus numeric time headers. */
export function isWideMatrix(table: Table): boolean {
  return (
    table.columns.length >= 2 &&
    table.columns[0] === "eta_s" &&
    table.columns.slice(1).every((c) => Number.isFinite(Number(c)))
  );
}

export function asMatrix(table: Table, path: string): Matrix {
  if (!isWideMatrix(table)) {
    throw new InputError(
      `${path}: expected a wide map CSV (first column eta_s, numeric time headers)`,
    );
  }
  if (table.rows.length === 0) {
    throw new InputError(`${path}: no data rows`);
  }
  const colValues = table.columns.slice(1).map(Number);
  const rowValues = table.rows.map((r) => Number(r["eta_s"]));
  const values = table.rows.map((r) => table.columns.slice(1).map((c) => Number(r[c])));
  return { rowName: "eta_s", colName: "t", rowValues, colValues, values };
}

/**
 * Pivot a long-format table into a rectangular grid.  Every (row, col)
 * combination must appear exactly once after filtering; anything else is a
 * non-rectangular grid and rejected.
 */
export function pivotLong(
  table: Table,
  rowCol: string,
  colCol: string,
  valueCol: string,
  path: string,
  filter: Record<string, number> = {},
): Matrix {
  requireColumns(table, [rowCol, colCol, valueCol, ...Object.keys(filter)], path);
  const rows = table.rows.filter((r) =>
    Object.entries(filter).every(([k, v]) => Number(r[k]) === v),
  );
  if (rows.length === 0) {
    throw new InputError(`${path}: no rows left after filtering`);
  }
  const rowValues = uniqueSorted(rows.map((r) => Number(r[rowCol])));
  const colValues = uniqueSorted(rows.map((r) => Number(r[colCol])));
  const index = new Map<string, number>();
  for (const r of rows) {
    const key = `${Number(r[rowCol])}|${Number(r[colCol])}`;
    if (index.has(key)) {
      throw new InputError(
        `${path}: duplicate cell at ${rowCol}=${r[rowCol]}, ${colCol}=${r[colCol]}; ` +
          `grid is not rectangular (add a --filter for the remaining axes?)`,
      );
    }
    index.set(key, Number(r[valueCol]));
  }
  const values = rowValues.map((rv) =>
    colValues.map((cv) => {
      const v = index.get(`${rv}|${cv}`);
      if (v === undefined) {
        throw new InputError(
          `${path}: missing cell at ${rowCol}=${rv}, ${colCol}=${cv}; grid is not rectangular`,
        );
      }
      return v;
    }),
  );
  return { rowName: rowCol, colName: colCol, rowValues, colValues, values };
}

function uniqueSorted(xs: number[]): number[] {
  return [...new Set(xs)].sort((a, b) => a - b);
}
