import { basename } from "node:path";
import { interpolateViridis } from "d3-scale-chromatic";
import { asMatrix, isWideMatrix, pivotLong, readTable, type Matrix } from "./csv.js";
import { writePng } from "./render.js";
import { colorBar, esc, fmtTick, FONT, openSvg, title, type Frame } from "./svg.js";

export interface SurfaceJob {
  input: string;
  output: string;
  /** value column when pivoting a long-format sweep (default C_bits) */
  zColumn: string;
  /** axis filter when pivoting, e.g. { T_s: 1 } */
  filter: Record<string, number>;
  title?: string;
}

export function plotSurface(job: SurfaceJob): void {
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
 * Axonometric projection of the value grid over (t, eta_s).  Cells are drawn
 * back to front as filled quads colored by height; quads touching a NaN
 * corner are left blank.
 */
function render(m: Matrix, job: SurfaceJob, label: string): string {
  const frame: Frame = {
    width: 680,
    height: 480,
    margin: { top: 48, right: 110, bottom: 40, left: 40 },
  };
  const finite = m.values.flat().filter(Number.isFinite);
  const zLo = Math.min(...finite, 0);
  const zHi = Math.max(...finite);
  const zSpan = zHi - zLo || 1;

  const plotW = frame.width - frame.margin.left - frame.margin.right;
  const plotH = frame.height - frame.margin.top - frame.margin.bottom;
  const depthX = 0.35 * plotW;
  const depthY = 0.30 * plotH;
  const heightPx = 0.55 * plotH;

  const nr = m.rowValues.length;
  const nc = m.colValues.length;
  const rowSpan = m.rowValues[nr - 1] - m.rowValues[0] || 1;
  const colSpan = m.colValues[nc - 1] - m.colValues[0] || 1;
  const project = (i: number, j: number, z: number): [number, number] => {
    const u = (m.colValues[j] - m.colValues[0]) / colSpan;
    const v = (m.rowValues[i] - m.rowValues[0]) / rowSpan;
    const zn = (z - zLo) / zSpan;
    const px = frame.margin.left + u * (plotW - depthX) + v * depthX;
    const py = frame.margin.top + plotH - v * depthY - zn * heightPx;
    return [px, py];
  };

  const parts: string[] = [openSvg(frame), title(frame, job.title ?? "")];
  // far rows first so near cells paint over them
  for (let i = nr - 2; i >= 0; i--) {
    for (let j = 0; j < nc - 1; j++) {
      const corners = [
        [i + 1, j],
        [i + 1, j + 1],
        [i, j + 1],
        [i, j],
      ] as const;
      const zs = corners.map(([ci, cj]) => m.values[ci][cj]);
      if (!zs.every(Number.isFinite)) continue; // masked cell: blank
      const pts = corners
        .map(([ci, cj], k) => project(ci, cj, zs[k]).map((p) => p.toFixed(2)).join(","))
        .join(" ");
      const mean = zs.reduce((a, b) => a + b, 0) / 4;
      const color = interpolateViridis((mean - zLo) / zSpan);
      parts.push(
        `<polygon points="${pts}" fill="${color}" stroke="${color}" stroke-width="0.4"/>`,
      );
    }
  }
  parts.push(axisAnnotations(frame, m, depthX, depthY, plotW, plotH));
  parts.push(colorBar(frame, interpolateViridis, zLo, zHi, label));
  parts.push("</svg>");
  return parts.join("");
}

function axisAnnotations(
  frame: Frame,
  m: Matrix,
  depthX: number,
  depthY: number,
  plotW: number,
  plotH: number,
): string {
  const x0 = frame.margin.left;
  const y0 = frame.margin.top + plotH;
  const parts: string[] = [];
  parts.push(
    `<text x="${x0 + (plotW - depthX) / 2}" y="${y0 + 24}" text-anchor="middle" ` +
      `font-family="${FONT}" font-size="13">${esc(m.colName)} ` +
      `(${fmtTick(m.colValues[0])} to ${fmtTick(m.colValues[m.colValues.length - 1])})</text>`,
  );
  parts.push(
    `<text x="${x0 + plotW - depthX / 2 + 30}" y="${y0 - depthY / 2}" text-anchor="start" ` +
      `font-family="${FONT}" font-size="13">${esc(m.rowName)} ` +
      `(${fmtTick(m.rowValues[0])} to ${fmtTick(m.rowValues[m.rowValues.length - 1])})</text>`,
  );
  return parts.join("");
}
