import type { ScaleLinear } from "d3-scale";

export function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export const FONT = "DejaVu Sans, sans-serif";

export interface Frame {
  width: number;
  height: number;
  margin: { top: number; right: number; bottom: number; left: number };
}

export function openSvg(f: Frame): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${f.width}" height="${f.height}">` +
    `<rect width="${f.width}" height="${f.height}" fill="white"/>`
  );
}

export function title(f: Frame, text: string): string {
  if (!text) return "";
  return (
    `<text x="${f.width / 2}" y="${f.margin.top - 12}" text-anchor="middle" ` +
    `font-family="${FONT}" font-size="15">${esc(text)}</text>`
  );
}

/** Bottom and left linear axes with tick marks, labels, and a plot border. */
export function axes(
  f: Frame,
  x: ScaleLinear<number, number>,
  y: ScaleLinear<number, number>,
  xLabel: string,
  yLabel: string,
): string {
  const { top, left } = f.margin;
  const bottom = f.height - f.margin.bottom;
  const right = f.width - f.margin.right;
  const parts: string[] = [];
  parts.push(
    `<rect x="${left}" y="${top}" width="${right - left}" height="${bottom - top}" ` +
      `fill="none" stroke="#333" stroke-width="1"/>`,
  );
  for (const t of x.ticks(8)) {
    const px = x(t);
    parts.push(`<line x1="${px}" y1="${bottom}" x2="${px}" y2="${bottom + 5}" stroke="#333"/>`);
    parts.push(
      `<text x="${px}" y="${bottom + 18}" text-anchor="middle" font-family="${FONT}" ` +
        `font-size="11">${fmtTick(t)}</text>`,
    );
  }
  for (const t of y.ticks(6)) {
    const py = y(t);
    parts.push(`<line x1="${left - 5}" y1="${py}" x2="${left}" y2="${py}" stroke="#333"/>`);
    parts.push(
      `<text x="${left - 8}" y="${py + 4}" text-anchor="end" font-family="${FONT}" ` +
        `font-size="11">${fmtTick(t)}</text>`,
    );
  }
  parts.push(
    `<text x="${(left + right) / 2}" y="${f.height - 8}" text-anchor="middle" ` +
      `font-family="${FONT}" font-size="13">${esc(xLabel)}</text>`,
  );
  parts.push(
    `<text x="14" y="${(top + bottom) / 2}" text-anchor="middle" font-family="${FONT}" ` +
      `font-size="13" transform="rotate(-90 14 ${(top + bottom) / 2})">${esc(yLabel)}</text>`,
  );
  return parts.join("");
}

export function fmtTick(v: number): string {
  if (v !== 0 && (Math.abs(v) >= 1e4 || Math.abs(v) < 1e-3)) {
    return v.toExponential(1);
  }
  return `${Number(v.toPrecision(6))}`;
}

/** Vertical color bar keyed to [lo, hi] with the given color function. */
export function colorBar(
  f: Frame,
  color: (t: number) => string,
  lo: number,
  hi: number,
  label: string,
): string {
  const x = f.width - f.margin.right + 18;
  const top = f.margin.top;
  const height = f.height - f.margin.top - f.margin.bottom;
  const n = 64;
  const parts: string[] = [];
  for (let i = 0; i < n; i++) {
    const y0 = top + (height * (n - 1 - i)) / n;
    parts.push(
      `<rect x="${x}" y="${y0}" width="14" height="${height / n + 0.5}" ` +
        `fill="${color(i / (n - 1))}"/>`,
    );
  }
  parts.push(`<rect x="${x}" y="${top}" width="14" height="${height}" fill="none" stroke="#333"/>`);
  for (const frac of [0, 0.5, 1]) {
    const v = lo + frac * (hi - lo);
    const py = top + height * (1 - frac);
    parts.push(
      `<text x="${x + 18}" y="${py + 4}" font-family="${FONT}" font-size="10">${fmtTick(v)}</text>`,
    );
  }
  parts.push(
    `<text x="${x + 7}" y="${top - 8}" text-anchor="middle" font-family="${FONT}" ` +
      `font-size="11">${esc(label)}</text>`,
  );
  return parts.join("");
}
