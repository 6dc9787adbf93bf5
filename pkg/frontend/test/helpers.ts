import { readFileSync } from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

export const TESTDATA = fileURLToPath(new URL("../testdata/", import.meta.url));

export function fixturePath(name: string): string {
  return path.join(TESTDATA, name);
}

export function fixture(name: string): string {
  return readFileSync(fixturePath(name), "utf8");
}

/**
 * Field extraction independent of src/csv.ts, so identity checks do not
 * share code with the implementation under test.
 */
export function rawColumn(text: string, col: string): string[] {
  const lines = text.trim().split("\n");
  const idx = lines[0]!.split(",").indexOf(col);
  if (idx < 0) throw new Error(`no column ${col} in header`);
  return lines.slice(1).map((ln) => ln.split(",")[idx]!);
}

export function numColumn(text: string, col: string): number[] {
  return rawColumn(text, col).map(Number);
}

/** Replace one field of one data row, returning the patched CSV text. */
export function patchField(text: string, rowIdx: number, col: string, value: string): string {
  const lines = text.trim().split("\n");
  const idx = lines[0]!.split(",").indexOf(col);
  if (idx < 0) throw new Error(`no column ${col} in header`);
  const fields = lines[rowIdx + 1]!.split(",");
  fields[idx] = value;
  lines[rowIdx + 1] = fields.join(",");
  return lines.join("\n") + "\n";
}

/** Drop a column entirely (header and every row). */
export function dropColumn(text: string, col: string): string {
  const lines = text.trim().split("\n");
  const idx = lines[0]!.split(",").indexOf(col);
  if (idx < 0) throw new Error(`no column ${col} in header`);
  return (
    lines
      .map((ln) => {
        const fields = ln.split(",");
        fields.splice(idx, 1);
        return fields.join(",");
      })
      .join("\n") + "\n"
  );
}

/** A flat sweep, the shape a zero-mixing-angle run produces. */
export function constantCsv(rows: number, model = "wavepacket"): string {
  const header = "L_m,P_surv,P_trans,U,U_bound,N_l1,N_re,N_sk,att_l1,att_re,att_sk,model";
  const body = Array.from(
    { length: rows },
    (_, i) => `${i * 100},1,0,2,1,2,2,2,false,false,false,${model}`
  );
  return [header, ...body].join("\n") + "\n";
}
