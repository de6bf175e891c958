/**
 * Parsing and schema validation for trifrust run.csv files.
 *
 * The header must match the simulator's record schema exactly (names and
 * order); a mismatch is reported naming the offending column.
 */

export const CSV_COLUMNS = [
  "regime",
  "mode",
  "step",
  "J_over_h",
  "N12",
  "N13",
  "N1_23",
  "delta_N2",
  "D12",
  "D13",
  "D1_23",
  "delta_D",
  "delta_D_mixed",
  "fidelity_vs_ground",
  "ground_prob",
  "epsilon",
] as const;

export interface RunRow {
  regime: string;
  mode: string;
  step: number;
  J_over_h: number;
  N12: number;
  N13: number;
  N1_23: number;
  delta_N2: number;
  D12: number;
  D13: number;
  D1_23: number;
  delta_D: number;
  delta_D_mixed: number;
  fidelity_vs_ground: number;
  ground_prob: number;
  epsilon: number;
}

export class SchemaError extends Error {}

export function parseRunCsv(text: string): RunRow[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty file: missing header row");
  }
  const header = lines[0].split(",");
  for (let i = 0; i < CSV_COLUMNS.length; i++) {
    if (header[i] !== CSV_COLUMNS[i]) {
      const found = header[i] === undefined ? "nothing" : `'${header[i]}'`;
      throw new SchemaError(`schema mismatch: expected column '${CSV_COLUMNS[i]}' at position ${i}, found ${found}`);
    }
  }
  if (header.length > CSV_COLUMNS.length) {
    throw new SchemaError(`schema mismatch: unexpected extra column '${header[CSV_COLUMNS.length]}'`);
  }

  const rows: RunRow[] = [];
  for (let r = 1; r < lines.length; r++) {
    const parts = lines[r].split(",");
    if (parts.length !== CSV_COLUMNS.length) {
      throw new SchemaError(`row ${r}: has ${parts.length} fields, expected ${CSV_COLUMNS.length}`);
    }
    const num = (i: number): number => {
      const v = Number(parts[i]);
      if (!Number.isFinite(v)) {
        throw new SchemaError(`row ${r}: column '${CSV_COLUMNS[i]}' is not a finite number: '${parts[i]}'`);
      }
      return v;
    };
    rows.push({
      regime: parts[0],
      mode: parts[1],
      step: num(2),
      J_over_h: num(3),
      N12: num(4),
      N13: num(5),
      N1_23: num(6),
      delta_N2: num(7),
      D12: num(8),
      D13: num(9),
      D1_23: num(10),
      delta_D: num(11),
      delta_D_mixed: num(12),
      fidelity_vs_ground: num(13),
      ground_prob: num(14),
      epsilon: num(15),
    });
  }
  return rows;
}

/** Stable (regime, mode) pairs present in the data, sorted. */
export function seriesKeys(rows: RunRow[]): Array<{ regime: string; mode: string }> {
  const seen = new Map<string, { regime: string; mode: string }>();
  for (const r of rows) {
    seen.set(`${r.regime}|${r.mode}`, { regime: r.regime, mode: r.mode });
  }
  return [...seen.keys()].sort().map((k) => seen.get(k)!);
}
