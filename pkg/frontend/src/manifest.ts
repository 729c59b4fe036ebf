import { existsSync, readFileSync } from "node:fs";
import { basename, dirname, join } from "node:path";

/**
 * Build a legend label for a scenario CSV from the manifest.json the solver
 * writes next to it; fall back to the directory or file name.
 */
export function labelFor(csvPath: string): string {
  const manifestPath = join(dirname(csvPath), "manifest.json");
  if (existsSync(manifestPath)) {
    try {
      const manifest = JSON.parse(readFileSync(manifestPath, "utf-8"));
      const cfg = manifest.resolved_config ?? {};
      const parts: string[] = [];
      if (cfg.bath) {
        parts.push(`s=${cfg.bath.s}`, `T_s=${cfg.bath.T_s}`, `eta=${round(cfg.bath.eta)}`);
      }
      if (cfg.state) {
        const [re, im] = cfg.state.alpha ?? [0, 0];
        parts.push(`alpha=${im ? `${re}+${im}i` : re}`, `r=${cfg.state.r}`);
      }
      if (parts.length > 0) return parts.join(" ");
    } catch {
      // unreadable manifest: fall through to the path-based label
    }
  }
  const dir = basename(dirname(csvPath));
  return dir === "." || dir === "" ? basename(csvPath) : dir;
}

function round(v: number): number {
  return Number(Number(v).toPrecision(4));
}
