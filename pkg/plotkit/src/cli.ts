#!/usr/bin/env node
import { parseArgs } from "node:util";

import { EmptyInputError, MissingColumnError } from "./csv.js";
import { render, XMode } from "./render.js";

const USAGE = `usage: plotkit --input sweep.csv --out figure.svg [options]

options:
  --input FILE      sweep CSV (schema: n,d1,d3,seed,trial,algo,status,h,elapsed_ms)
  --out FILE        output image (.svg)
  --mode MODE       logn (x log-scaled, default) or loglog (both axes)
  --group-by COL    column defining one line per value (default d1)
  --title TEXT      figure title
  --xlabel TEXT     x-axis label
  --ylabel TEXT     y-axis label
`;

export function main(argv: string[]): number {
  let values;
  try {
    values = parseArgs({
      args: argv,
      options: {
        input: { type: "string" },
        out: { type: "string" },
        mode: { type: "string", default: "logn" },
        "group-by": { type: "string", default: "d1" },
        title: { type: "string" },
        xlabel: { type: "string" },
        ylabel: { type: "string" },
        help: { type: "boolean", default: false },
      },
    }).values;
  } catch (error) {
    process.stderr.write(`${(error as Error).message}\n${USAGE}`);
    return 1;
  }
  if (values.help) {
    process.stdout.write(USAGE);
    return 0;
  }
  if (!values.input || !values.out) {
    process.stderr.write(`--input and --out are required\n${USAGE}`);
    return 1;
  }
  const modes: Record<string, XMode> = { logn: "LOG_N", loglog: "LOGLOG" };
  const mode = modes[values.mode!];
  if (!mode) {
    process.stderr.write(`--mode must be logn or loglog, got ${values.mode}\n`);
    return 1;
  }
  if (!values.out.endsWith(".svg")) {
    process.stderr.write(`--out must name an .svg file, got ${values.out}\n`);
    return 1;
  }
  try {
    render({
      input: values.input,
      output: values.out,
      mode,
      groupBy: values["group-by"]!,
      title: values.title,
      xLabel: values.xlabel,
      yLabel: values.ylabel,
    });
  } catch (error) {
    if (error instanceof MissingColumnError || error instanceof EmptyInputError) {
      process.stderr.write(`error: ${error.message}\n`);
      return 2;
    }
    if (error instanceof Error && "code" in error) {
      process.stderr.write(`error: ${error.message}\n`);  // fs errors
      return 2;
    }
    throw error;
  }
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
