import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

export const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture(...parts: string[]): string {
  return join(FIXTURES, ...parts);
}

const PNG_MAGIC = Buffer.from([0x89, 0x50, 0x4e, 0x47]);

export function isPng(path: string): boolean {
  const head = readFileSync(path).subarray(0, 4);
  return head.equals(PNG_MAGIC);
}
