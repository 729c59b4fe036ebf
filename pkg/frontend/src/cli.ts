#!/usr/bin/env node
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { plotContour } from "./contour.js";
import { InputError } from "./csv.js";
import { plotSurface } from "./surface.js";
import { plotTimeseries } from "./timeseries.js";

export const EXIT_OK = 0;
export const EXIT_ERROR = 1; // unexpected failure
export const EXIT_INPUT = 2; // bad usage or bad input data

interface CommonArgs {
  in: string[];
  out: string;
  z: string;
  filter: string[];
  title?: string;
}

function parseFilter(items: string[]): Record<string, number> {
  const filter: Record<string, number> = {};
  for (const item of items) {
    const eq = item.indexOf("=");
    const value = Number(item.slice(eq + 1));
    if (eq <= 0 || !Number.isFinite(value)) {
      throw new InputError(`bad --filter ${item}; expected column=number`);
    }
    filter[item.slice(0, eq)] = value;
  }
  return filter;
}

export async function main(argv: string[]): Promise<number> {
  let kind = "";
  const parser = yargs(argv)
    .scriptName("plot")
    .command("$0 <kind>", "render a solver CSV to PNG", (cmd) =>
      cmd.positional("kind", {
        choices: ["timeseries", "surface3d", "contour"] as const,
        describe: "figure kind",
      }),
    )
    .option("in", { type: "string", array: true, demandOption: true, describe: "input CSV file(s)" })
    .option("out", { type: "string", demandOption: true, describe: "output PNG file" })
    .option("z", { type: "string", default: "C_bits", describe: "value column for long-format input" })
    .option("filter", {
      type: "string",
      array: true,
      default: [] as string[],
      describe: "fix a sweep axis when pivoting, e.g. --filter T_s=1",
    })
    .option("title", { type: "string", describe: "figure title" })
    .strict()
    .exitProcess(false)
    .fail((msg) => {
      throw new InputError(msg);
    });

  try {
    const args = (await parser.parse()) as unknown as CommonArgs & { kind: string };
    kind = args.kind;
    const filter = parseFilter(args.filter);
    if (kind === "timeseries") {
      plotTimeseries({ inputs: args.in, output: args.out, yColumn: args.z, title: args.title });
    } else {
      if (args.in.length !== 1) {
        throw new InputError(`${kind} takes exactly one input CSV`);
      }
      const job = {
        input: args.in[0],
        output: args.out,
        zColumn: args.z,
        filter,
        title: args.title,
      };
      if (kind === "surface3d") {
        plotSurface(job);
      } else {
        plotContour(job);
      }
    }
  } catch (err) {
    if (err instanceof InputError) {
      console.error(`input error: ${err.message}`);
      return EXIT_INPUT;
    }
    console.error(err);
    return EXIT_ERROR;
  }
  return EXIT_OK;
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (invokedDirectly) {
  main(hideBin(process.argv)).then((code) => {
    process.exitCode = code;
  });
}
