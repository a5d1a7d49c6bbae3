#!/usr/bin/env node
import { writeFileSync } from "node:fs";
import { parseArgs } from "node:util";
import { CsvError, loadCurve, type ColumnSelector, type CurveSpec } from "./csv.js";
import { renderFromSpecs } from "./chart.js";

const USAGE =
  "usage: plot --csv label=path [--csv label=path ...] " +
  "[--column total|routing] [--title TITLE] --out FILE.svg";

export function parseCliArgs(argv: string[]): {
  specs: CurveSpec[];
  title: string;
  out: string;
} {
  const { values } = parseArgs({
    args: argv,
    options: {
      csv: { type: "string", multiple: true },
      column: { type: "string", default: "total" },
      title: { type: "string", default: "Average request cost" },
      out: { type: "string" },
    },
  });
  const csvArgs = values.csv ?? [];
  if (csvArgs.length === 0 || !values.out) {
    throw new Error(USAGE);
  }
  const column = values.column as string;
  if (column !== "total" && column !== "routing") {
    throw new Error(`--column must be "total" or "routing", got "${column}"`);
  }
  const specs: CurveSpec[] = csvArgs.map((arg) => {
    const eq = arg.indexOf("=");
    if (eq <= 0) {
      throw new Error(`--csv expects label=path, got "${arg}"`);
    }
    return {
      label: arg.slice(0, eq),
      path: arg.slice(eq + 1),
      column: column as ColumnSelector,
    };
  });
  return { specs, title: values.title as string, out: values.out };
}

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseCliArgs(argv);
  } catch (err) {
    console.error((err as Error).message);
    return 2;
  }
  let svg: string;
  try {
    svg = renderFromSpecs(parsed.specs, loadCurve, parsed.title);
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(err.message);
      return 3;
    }
    throw err;
  }
  writeFileSync(parsed.out, svg);
  console.error(`wrote ${parsed.out} (${parsed.specs.length} curves)`);
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
