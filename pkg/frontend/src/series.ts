/**
 * Figure assembly: turns parsed sweep rows into panels of plottable series.
 *
 * Three figure kinds:
 *   eur_naqc   one CSV, two panels: U and U_b on the left, N_re on the right
 *   hierarchy  one CSV, one panel: N_l1 / N_re / N_sk with their bound lines
 *   wp_vs_pw   paired CSVs, one panel: N_re solid (wavepacket) vs dashed (planewave)
 *
 * Series values are copied verbatim from the CSV columns. Nothing here
 * recomputes, rescales, or resamples physics quantities.
 */

import { column, type NumericColumn, type SweepRow } from "./csv.js";
import { type Measure, type NaqcBounds } from "./bounds.js";

export const FIGURE_KINDS = ["eur_naqc", "hierarchy", "wp_vs_pw"] as const;

export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface FigureSpec {
  kind: FigureKind;
  /** One CSV path, or the [wavepacket, planewave] pair for wp_vs_pw (either order). */
  csv: string[];
  out: string;
  /** Constants JSON from the pipeline; required for hierarchy, optional elsewhere. */
  bounds?: string;
  title?: string;
  xLabel?: string;
}

export interface Series {
  label: string;
  /** CSV column the values came from. */
  column: NumericColumn;
  /** CSV path the values came from. */
  source: string;
  x: number[];
  y: number[];
  color: string;
  /** stroke-dasharray; solid when absent. */
  dash?: string;
}

export interface BoundLine {
  measure: Measure;
  label: string;
  value: number;
  color: string;
}

export interface Panel {
  name: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  boundLines: BoundLine[];
}

export interface Figure {
  kind: FigureKind;
  title: string;
  panels: Panel[];
}

export interface CsvTable {
  source: string;
  rows: SweepRow[];
}

export interface FigureInputs {
  /** One table per spec.csv entry, same order. */
  tables: CsvTable[];
  bounds: NaqcBounds | null;
}

export class SpecError extends Error {}

const COL_U = "#d62728";
const COL_UB = "#1f77b4";
const COL_L1 = "#d62728";
const COL_RE = "#1f77b4";
const COL_SK = "#2ca02c";
const COL_WP = "#1f77b4";
const COL_PW = "#d62728";
const DASH_PW = "7,4";

const DEFAULT_X_LABEL = "L (m)";

/** Validate a decoded spec.json object; normalizes csv to an array. */
export function parseFigureSpec(raw: unknown, source = "<spec>"): FigureSpec {
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new SpecError(`${source}: spec must be a JSON object`);
  }
  const obj = raw as Record<string, unknown>;

  const kind = obj["kind"];
  if (typeof kind !== "string" || !(FIGURE_KINDS as readonly string[]).includes(kind)) {
    throw new SpecError(
      `${source}: "kind" must be one of ${FIGURE_KINDS.join(", ")}, got ${JSON.stringify(kind)}`
    );
  }

  const rawCsv = obj["csv"];
  let csv: string[];
  if (typeof rawCsv === "string") csv = [rawCsv];
  else if (Array.isArray(rawCsv) && rawCsv.every((p) => typeof p === "string")) {
    csv = rawCsv as string[];
  } else {
    throw new SpecError(`${source}: "csv" must be a path or a list of paths`);
  }
  const want = kind === "wp_vs_pw" ? 2 : 1;
  if (csv.length !== want) {
    throw new SpecError(`${source}: kind "${kind}" takes ${want} csv path(s), got ${csv.length}`);
  }

  const out = obj["out"];
  if (typeof out !== "string" || out === "") {
    throw new SpecError(`${source}: "out" must be a non-empty path`);
  }

  for (const key of ["bounds", "title", "xLabel"] as const) {
    if (obj[key] !== undefined && typeof obj[key] !== "string") {
      throw new SpecError(`${source}: "${key}" must be a string`);
    }
  }
  if (kind === "hierarchy" && obj["bounds"] === undefined) {
    throw new SpecError(`${source}: hierarchy figures need a "bounds" file for the overlay lines`);
  }

  return {
    kind: kind as FigureKind,
    csv,
    out,
    bounds: obj["bounds"] as string | undefined,
    title: obj["title"] as string | undefined,
    xLabel: obj["xLabel"] as string | undefined,
  };
}

function makeSeries(
  table: CsvTable,
  col: NumericColumn,
  label: string,
  color: string,
  dash?: string
): Series {
  const s: Series = {
    label,
    column: col,
    source: table.source,
    x: column(table.rows, "L_m"),
    y: column(table.rows, col),
    color,
  };
  if (dash !== undefined) s.dash = dash;
  return s;
}

function boundLine(measure: Measure, bounds: NaqcBounds, color: string): BoundLine {
  return { measure, label: `${measure} bound`, value: bounds[measure], color };
}

function tableModel(table: CsvTable): string {
  const first = table.rows[0]!.model;
  for (const r of table.rows) {
    if (r.model !== first) {
      throw new SpecError(`${table.source}: mixed "model" values (${first} vs ${r.model})`);
    }
  }
  return first;
}

export function buildFigure(spec: FigureSpec, inputs: FigureInputs): Figure {
  if (inputs.tables.length !== spec.csv.length) {
    throw new SpecError(`expected ${spec.csv.length} tables, got ${inputs.tables.length}`);
  }
  const xLabel = spec.xLabel ?? DEFAULT_X_LABEL;
  const { bounds } = inputs;

  if (spec.kind === "eur_naqc") {
    const table = inputs.tables[0]!;
    const eur: Panel = {
      name: "uncertainty",
      xLabel,
      yLabel: "entropic uncertainty",
      series: [
        makeSeries(table, "U", "U", COL_U),
        makeSeries(table, "U_bound", "U_b", COL_UB),
      ],
      boundLines: [],
    };
    const naqc: Panel = {
      name: "naqc_re",
      xLabel,
      yLabel: "NAQC (relative entropy)",
      series: [makeSeries(table, "N_re", "N_re", COL_RE)],
      boundLines: bounds ? [boundLine("re", bounds, COL_RE)] : [],
    };
    return { kind: spec.kind, title: spec.title ?? "QMA-EUR and NAQC", panels: [eur, naqc] };
  }

  if (spec.kind === "hierarchy") {
    if (!bounds) throw new SpecError("hierarchy figures need a bounds file");
    const table = inputs.tables[0]!;
    const panel: Panel = {
      name: "naqc_hierarchy",
      xLabel,
      yLabel: "NAQC",
      series: [
        makeSeries(table, "N_l1", "N_l1", COL_L1),
        makeSeries(table, "N_re", "N_re", COL_RE),
        makeSeries(table, "N_sk", "N_sk", COL_SK),
      ],
      boundLines: [
        boundLine("l1", bounds, COL_L1),
        boundLine("re", bounds, COL_RE),
        boundLine("sk", bounds, COL_SK),
      ],
    };
    return { kind: spec.kind, title: spec.title ?? "NAQC measures", panels: [panel] };
  }

  // wp_vs_pw: pick the pair apart by each table's model column.
  const byModel = new Map<string, CsvTable>();
  for (const table of inputs.tables) byModel.set(tableModel(table), table);
  const wp = byModel.get("wavepacket");
  const pw = byModel.get("planewave");
  if (!wp || !pw) {
    const got = inputs.tables.map((t) => tableModel(t)).join(", ");
    throw new SpecError(`wp_vs_pw needs one wavepacket and one planewave CSV, got: ${got}`);
  }
  const panel: Panel = {
    name: "model_comparison",
    xLabel,
    yLabel: "NAQC (relative entropy)",
    series: [
      makeSeries(wp, "N_re", "N_re (wavepacket)", COL_WP),
      makeSeries(pw, "N_re", "N_re (planewave)", COL_PW, DASH_PW),
    ],
    boundLines: bounds ? [boundLine("re", bounds, COL_RE)] : [],
  };
  return { kind: spec.kind, title: spec.title ?? "wave packet vs plane wave", panels: [panel] };
}

/** The exact plotted arrays, for --dump-series. */
export function figureDump(fig: Figure): unknown {
  return {
    kind: fig.kind,
    title: fig.title,
    panels: fig.panels.map((p) => ({
      name: p.name,
      x_label: p.xLabel,
      y_label: p.yLabel,
      series: p.series.map((s) => ({
        label: s.label,
        column: s.column,
        source: s.source,
        dash: s.dash ?? null,
        x: s.x,
        y: s.y,
      })),
      bound_lines: p.boundLines.map((b) => ({ measure: b.measure, value: b.value })),
    })),
  };
}
