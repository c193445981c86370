import { readFileSync } from "node:fs";
import Papa from "papaparse";

export const REQUIRED_COLUMNS = [
  "n",
  "d1",
  "d3",
  "seed",
  "trial",
  "algo",
  "status",
  "h",
  "elapsed_ms",
] as const;

export class MissingColumnError extends Error {}
export class EmptyInputError extends Error {}

export interface SweepRow {
  n: number;
  d1: number;
  d3: number;
  seed: number;
  trial: number;
  algo: string;
  status: string;
  h: number;
  elapsed_ms: number;
}

export interface SeriesPoint {
  n: number;
  meanH: number;
}

/** One plotted line: all rows sharing a value of the group-by column. */
export interface Series {
  key: number;
  points: SeriesPoint[];
}

export function readSweepCsv(path: string): SweepRow[] {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  for (const column of REQUIRED_COLUMNS) {
    if (!fields.includes(column)) {
      throw new MissingColumnError(`CSV is missing required column "${column}"`);
    }
  }
  return parsed.data.map((row, i) => {
    const num = (column: string): number => {
      const value = Number(row[column]);
      if (!Number.isFinite(value)) {
        throw new EmptyInputError(`row ${i + 1}: non-numeric ${column}=${row[column]}`);
      }
      return value;
    };
    return {
      n: num("n"),
      d1: num("d1"),
      d3: num("d3"),
      seed: num("seed"),
      trial: num("trial"),
      algo: row["algo"],
      status: row["status"],
      h: num("h"),
      elapsed_ms: num("elapsed_ms"),
    };
  });
}

/**
 * Mean h per (group value, n) over every trial row, statuses included --
 * the same aggregation the sweep harness reports.  Series are sorted by
 * ascending group value, points by ascending n.
 */
export function groupSeries(rows: SweepRow[], groupBy: string): Series[] {
  if (!(REQUIRED_COLUMNS as readonly string[]).includes(groupBy)) {
    throw new MissingColumnError(`unknown group-by column "${groupBy}"`);
  }
  const byKey = new Map<number, Map<number, number[]>>();
  for (const row of rows) {
    const key = row[groupBy as "d1"];
    if (typeof key !== "number") {
      throw new MissingColumnError(`group-by column "${groupBy}" is not numeric`);
    }
    let cells = byKey.get(key);
    if (!cells) {
      cells = new Map();
      byKey.set(key, cells);
    }
    let hs = cells.get(row.n);
    if (!hs) {
      hs = [];
      cells.set(row.n, hs);
    }
    hs.push(row.h);
  }
  const series: Series[] = [];
  for (const key of [...byKey.keys()].sort((a, b) => a - b)) {
    const cells = byKey.get(key)!;
    const points = [...cells.keys()]
      .sort((a, b) => a - b)
      .map((n) => ({
        n,
        meanH: cells.get(n)!.reduce((s, h) => s + h, 0) / cells.get(n)!.length,
      }));
    series.push({ key, points });
  }
  return series;
}
