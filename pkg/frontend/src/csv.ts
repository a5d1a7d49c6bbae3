import { readFileSync } from "node:fs";

/** One sampled row of a harness ledger CSV. */
export interface LedgerRow {
  requestIndex: number;
  routingCostSum: number;
  adjustmentCostSum: number;
  cumulativeAvg: number;
}

export type ColumnSelector = "total" | "routing";

/** A named curve backed by a harness CSV. */
export interface CurveSpec {
  label: string;
  path: string;
  column: ColumnSelector;
}

export interface Point {
  x: number;
  y: number;
}

const EXPECTED_HEADER = [
  "request_index",
  "routing_cost_sum",
  "adjustment_cost_sum",
  "cumulative_avg",
];

export class CsvError extends Error {}

/** Parse a harness ledger CSV, validating the schema. */
export function parseLedgerCsv(path: string, text: string): LedgerRow[] {
  const lines = text.split(/\r?\n/).filter((line) => line.trim() !== "");
  if (lines.length === 0) {
    throw new CsvError(`${path}: empty file`);
  }
  const header = lines[0].split(",").map((cell) => cell.trim());
  if (
    header.length !== EXPECTED_HEADER.length ||
    header.some((name, i) => name !== EXPECTED_HEADER[i])
  ) {
    throw new CsvError(
      `${path}: expected header "${EXPECTED_HEADER.join(",")}", got "${lines[0]}"`,
    );
  }
  const rows: LedgerRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== EXPECTED_HEADER.length) {
      throw new CsvError(`${path}: line ${i + 1} has ${cells.length} fields`);
    }
    const values = cells.map(Number);
    if (values.some((v) => !Number.isFinite(v))) {
      throw new CsvError(`${path}: line ${i + 1} has a non-numeric field`);
    }
    rows.push({
      requestIndex: values[0],
      routingCostSum: values[1],
      adjustmentCostSum: values[2],
      cumulativeAvg: values[3],
    });
  }
  if (rows.length === 0) {
    throw new CsvError(`${path}: no data rows`);
  }
  return rows;
}

/** Load a CSV from disk and extract the selected cumulative-average series. */
export function loadCurve(spec: CurveSpec): Point[] {
  let text: string;
  try {
    text = readFileSync(spec.path, "utf8");
  } catch (err) {
    throw new CsvError(`${spec.path}: ${(err as Error).message}`);
  }
  const rows = parseLedgerCsv(spec.path, text);
  return rows.map((row) => ({
    x: row.requestIndex,
    y:
      spec.column === "total"
        ? row.cumulativeAvg
        : row.routingCostSum / row.requestIndex,
  }));
}
