import { mkdirSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";
import { Resvg } from "@resvg/resvg-js";

/** Rasterize at ~150 dpi (2x the nominal 72 dpi SVG coordinates). */
const ZOOM = 150 / 72;

export function writePng(svg: string, outPath: string): void {
  const png = new Resvg(svg, { fitTo: { mode: "zoom", value: ZOOM } }).render().asPng();
  mkdirSync(dirname(outPath), { recursive: true });
  writeFileSync(outPath, png);
}
