import { basename } from "node:path";
import { scaleLinear } from "d3-scale";
import { interpolateRdBu, interpolateViridis } from "d3-scale-chromatic";
import { asMatrix, isWideMatrix, pivotLong, readTable, type Matrix } from "./csv.js";
import { writePng } from "./render.js";
import { axes, colorBar, openSvg, title, type Frame } from "./svg.js";

export interface ContourJob {
  input: string;
  output: string;
  /** value column when pivoting a long-format sweep */
  zColumn: string;
  filter: Record<string, number>;
  title?: string;
}

export function plotContour(job: ContourJob): void {
  const table = readTable(job.input);
  let m: Matrix;
  let label = job.zColumn;
  if (isWideMatrix(table)) {
    m = asMatrix(table, job.input);
    label = basename(job.input).replace(/\.csv$/, "");
  } else {
    m = pivotLong(table, "eta_over_eta_c", "t", job.zColumn, job.input, job.filter);
  }
  writePng(render(m, job, label), job.output);
}

/**
 * Heatmap over (t, eta_s).  Sign-changing data gets a diverging palette
 * centered at zero so the Markovian/non-Markovian partition reads as a
 * two-color split; nonnegative data gets a sequential palette.  Masked
 * (NaN) cells stay blank.
 */
function render(m: Matrix, job: ContourJob, label: string): string {
  const frame: Frame = {
    width: 640,
    height: 440,
    margin: { top: 46, right: 110, bottom: 50, left: 64 },
  };
  const finite = m.values.flat().filter(Number.isFinite);
  const diverging = Math.min(...finite) < 0 && Math.max(...finite) > 0;
  let lo: number;
  let hi: number;
  let color: (t: number) => string;
  if (diverging) {
    const amp = Math.max(-Math.min(...finite), Math.max(...finite));
    lo = -amp;
    hi = amp;
    color = (t) => interpolateRdBu(1 - t); // blue negative, red positive
  } else {
    lo = Math.min(...finite);
    hi = Math.max(...finite);
    color = interpolateViridis;
  }
  const span = hi - lo || 1;

  const x = scaleLinear()
    .domain([m.colValues[0], m.colValues[m.colValues.length - 1]])
    .range([frame.margin.left, frame.width - frame.margin.right]);
  const y = scaleLinear()
    .domain([m.rowValues[0], m.rowValues[m.rowValues.length - 1]])
    .range([frame.height - frame.margin.bottom, frame.margin.top]);

  const parts: string[] = [openSvg(frame), title(frame, job.title ?? "")];
  for (let i = 0; i < m.rowValues.length; i++) {
    const [r0, r1] = cellEdges(m.rowValues, i);
    for (let j = 0; j < m.colValues.length; j++) {
      const z = m.values[i][j];
      if (!Number.isFinite(z)) continue; // masked cell: blank
      const [c0, c1] = cellEdges(m.colValues, j);
      const px = x(c0);
      const pw = x(c1) - px;
      const py = y(r1);
      const ph = y(r0) - py;
      parts.push(
        `<rect x="${px.toFixed(2)}" y="${py.toFixed(2)}" width="${pw.toFixed(2)}" ` +
          `height="${ph.toFixed(2)}" fill="${color((z - lo) / span)}"/>`,
      );
    }
  }
  parts.push(axes(frame, x, y, m.colName, m.rowName));
  parts.push(colorBar(frame, color, lo, hi, label));
  parts.push("</svg>");
  return parts.join("");
}

/** Edges of the cell around sample i (midpoints to the neighbors). */
function cellEdges(values: number[], i: number): [number, number] {
  const n = values.length;
  const lo = i === 0 ? values[0] : (values[i - 1] + values[i]) / 2;
  const hi = i === n - 1 ? values[n - 1] : (values[i] + values[i + 1]) / 2;
  return [lo, hi];
}
