import { scaleLinear } from "d3-scale";
import { schemeTableau10 } from "d3-scale-chromatic";
import { line } from "d3-shape";
import { InputError, numericColumn, readTable, requireColumns, type Table } from "./csv.js";
import { labelFor } from "./manifest.js";
import { writePng } from "./render.js";
import { axes, esc, FONT, openSvg, title, type Frame } from "./svg.js";

const SWEEP_AXES = ["s", "T_s", "eta_over_eta_c", "alpha", "r"];

export interface TimeseriesJob {
  inputs: string[];
  output: string;
  yColumn: string;
  title?: string;
}

interface Series {
  label: string;
  t: number[];
  y: number[];
}

export function plotTimeseries(job: TimeseriesJob): void {
  const series = job.inputs.flatMap((path) => loadSeries(path, job.yColumn));
  for (const s of series) {
    if (s.t.length < 2) {
      throw new InputError(`series "${s.label}" has ${s.t.length} point(s); cannot draw a line`);
    }
  }
  writePng(render(series, job), job.output);
}

function loadSeries(path: string, yColumn: string): Series[] {
  const table = readTable(path);
  requireColumns(table, ["t", yColumn], path);
  if (table.rows.length === 0) {
    throw new InputError(`${path}: no data rows`);
  }
  const axisCols = SWEEP_AXES.filter((c) => table.columns.includes(c));
  if (axisCols.length === 0) {
    return [{ label: labelFor(path), t: numericColumn(table, "t"), y: numericColumn(table, yColumn) }];
  }
  return splitSweep(table, axisCols, yColumn);
}

/** One series per distinct combination of the sweep axes that actually vary. */
function splitSweep(table: Table, axisCols: string[], yColumn: string): Series[] {
  const varying = axisCols.filter(
    (c) => new Set(table.rows.map((r) => r[c])).size > 1,
  );
  const labelCols = varying.length > 0 ? varying : axisCols;
  const groups = new Map<string, Series>();
  for (const row of table.rows) {
    const key = labelCols.map((c) => `${c}=${Number(row[c])}`).join(" ");
    let g = groups.get(key);
    if (!g) {
      g = { label: key, t: [], y: [] };
      groups.set(key, g);
    }
    g.t.push(Number(row["t"]));
    g.y.push(Number(row[yColumn]));
  }
  return [...groups.values()];
}

function render(series: Series[], job: TimeseriesJob): string {
  const frame: Frame = {
    width: 640,
    height: 420,
    margin: { top: 40, right: 170, bottom: 48, left: 62 },
  };
  const allT = series.flatMap((s) => s.t);
  const allY = series.flatMap((s) => s.y).filter(Number.isFinite);
  if (allY.length === 0) {
    throw new InputError(`column ${job.yColumn} has no finite values`);
  }
  const x = scaleLinear()
    .domain([Math.min(...allT), Math.max(...allT)])
    .range([frame.margin.left, frame.width - frame.margin.right]);
  const yLo = Math.min(...allY);
  const yHi = Math.max(...allY);
  const pad = yHi === yLo ? Math.max(Math.abs(yHi), 1) * 0.05 : (yHi - yLo) * 0.05;
  const y = scaleLinear()
    .domain([yLo - pad, yHi + pad])
    .range([frame.height - frame.margin.bottom, frame.margin.top]);

  const parts: string[] = [openSvg(frame), title(frame, job.title ?? "")];
  parts.push(axes(frame, x, y, "t", job.yColumn));
  series.forEach((s, i) => {
    const color = schemeTableau10[i % schemeTableau10.length];
    const gen = line<[number, number]>()
      .defined((d) => Number.isFinite(d[1]))
      .x((d) => x(d[0]))
      .y((d) => y(d[1]));
    const pts = s.t.map((t, k) => [t, s.y[k]] as [number, number]);
    parts.push(`<path d="${gen(pts) ?? ""}" fill="none" stroke="${color}" stroke-width="1.6"/>`);
    const ly = frame.margin.top + 16 * i;
    const lx = frame.width - frame.margin.right + 12;
    parts.push(`<line x1="${lx}" y1="${ly}" x2="${lx + 18}" y2="${ly}" stroke="${color}" stroke-width="2"/>`);
    parts.push(
      `<text x="${lx + 24}" y="${ly + 4}" font-family="${FONT}" font-size="11">${esc(s.label)}</text>`,
    );
  });
  parts.push("</svg>");
  return parts.join("");
}
