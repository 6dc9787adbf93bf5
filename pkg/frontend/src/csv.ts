/**
 * Reader for the sweep CSV emitted by the oscillation pipeline.
 *
 * The schema is fixed at twelve columns:
 *   L_m,P_surv,P_trans,U,U_bound,N_l1,N_re,N_sk,att_l1,att_re,att_sk,model
 *
 * Columns are matched by header name, not position. Every schema column
 * must be present; values are taken verbatim (no resampling, no physics).
 */

export const CSV_COLUMNS = [
  "L_m",
  "P_surv",
  "P_trans",
  "U",
  "U_bound",
  "N_l1",
  "N_re",
  "N_sk",
  "att_l1",
  "att_re",
  "att_sk",
  "model",
] as const;

export type CsvColumn = (typeof CSV_COLUMNS)[number];

export type NumericColumn = Exclude<CsvColumn, "att_l1" | "att_re" | "att_sk" | "model">;

const BOOL_COLUMNS = new Set<CsvColumn>(["att_l1", "att_re", "att_sk"]);

export interface SweepRow {
  L_m: number;
  P_surv: number;
  P_trans: number;
  U: number;
  U_bound: number;
  N_l1: number;
  N_re: number;
  N_sk: number;
  att_l1: boolean;
  att_re: boolean;
  att_sk: boolean;
  model: string;
}

export class CsvError extends Error {}

function parseNumber(raw: string, col: string, line: number, source: string): number {
  if (raw === "") throw new CsvError(`${source}:${line}: empty value in column "${col}"`);
  const v = Number(raw);
  if (Number.isNaN(v)) {
    throw new CsvError(`${source}:${line}: bad number "${raw}" in column "${col}"`);
  }
  return v;
}

function parseBool(raw: string, col: string, line: number, source: string): boolean {
  if (raw === "true") return true;
  if (raw === "false") return false;
  throw new CsvError(`${source}:${line}: bad boolean "${raw}" in column "${col}"`);
}

export function parseSweepCsv(text: string, source = "<csv>"): SweepRow[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.length > 0);
  const headerLine = lines[0];
  if (headerLine === undefined) throw new CsvError(`${source}: empty file`);

  const header = headerLine.split(",");
  const where = new Map<string, number>();
  header.forEach((name, i) => where.set(name, i));
  for (const col of CSV_COLUMNS) {
    if (!where.has(col)) throw new CsvError(`${source}: missing column "${col}"`);
  }

  const rows: SweepRow[] = [];
  for (let i = 1; i < lines.length; i++) {
    const fields = lines[i]!.split(",");
    if (fields.length !== header.length) {
      throw new CsvError(
        `${source}:${i + 1}: expected ${header.length} fields, got ${fields.length}`
      );
    }
    const cell = (col: CsvColumn): string => fields[where.get(col)!]!;
    const row = {} as Record<CsvColumn, number | boolean | string>;
    for (const col of CSV_COLUMNS) {
      if (col === "model") row[col] = cell(col);
      else if (BOOL_COLUMNS.has(col)) row[col] = parseBool(cell(col), col, i + 1, source);
      else row[col] = parseNumber(cell(col), col, i + 1, source);
    }
    rows.push(row as unknown as SweepRow);
  }
  if (rows.length === 0) throw new CsvError(`${source}: no data rows`);
  return rows;
}

/** Pull one numeric column, in row order. */
export function column(rows: SweepRow[], col: NumericColumn): number[] {
  return rows.map((r) => r[col]);
}
