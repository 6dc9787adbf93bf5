import { describe, expect, it } from "vitest";

import { parseSweepCsv } from "../src/csv.js";
import { parseBounds } from "../src/bounds.js";
import {
  SpecError,
  buildFigure,
  figureDump,
  parseFigureSpec,
  type CsvTable,
  type FigureSpec,
} from "../src/series.js";
import { renderFigure } from "../src/svg.js";
import { constantCsv, fixture, numColumn, patchField } from "./helpers.js";

const BOUNDS = parseBounds(fixture("bounds.json"));

function table(name: string, text?: string): CsvTable {
  return { source: name, rows: parseSweepCsv(text ?? fixture(name), name) };
}

function spec(partial: Partial<FigureSpec> & { kind: FigureSpec["kind"] }): FigureSpec {
  return { csv: ["in.csv"], out: "out.svg", ...partial };
}

describe("parseFigureSpec", () => {
  it("normalizes a single csv path to a list", () => {
    const s = parseFigureSpec({ kind: "eur_naqc", csv: "a.csv", out: "o.svg" });
    expect(s.csv).toEqual(["a.csv"]);
  });

  it.each([
    [{ kind: "volcano", csv: "a.csv", out: "o.svg" }, /"kind" must be one of/],
    [{ kind: "eur_naqc", csv: 7, out: "o.svg" }, /"csv" must be a path/],
    [{ kind: "eur_naqc", csv: ["a", "b"], out: "o.svg" }, /takes 1 csv path/],
    [{ kind: "wp_vs_pw", csv: ["a"], out: "o.svg" }, /takes 2 csv path/],
    [{ kind: "eur_naqc", csv: "a.csv", out: "" }, /"out" must be a non-empty path/],
    [{ kind: "hierarchy", csv: "a.csv", out: "o.svg" }, /need a "bounds" file/],
    [["not", "an", "object"], /must be a JSON object/],
  ])("rejects bad spec %#", (raw, msg) => {
    expect(() => parseFigureSpec(raw)).toThrow(msg);
  });
});

describe("buildFigure", () => {
  it("eur_naqc: two panels, U and U_b left, N_re right", () => {
    const fig = buildFigure(spec({ kind: "eur_naqc", csv: ["kamland.csv"] }), {
      tables: [table("kamland.csv")],
      bounds: BOUNDS,
    });
    expect(fig.panels).toHaveLength(2);
    const [eur, naqc] = fig.panels;
    expect(eur!.series.map((s) => s.label)).toEqual(["U", "U_b"]);
    expect(eur!.series.map((s) => s.column)).toEqual(["U", "U_bound"]);
    expect(eur!.boundLines).toHaveLength(0);
    expect(naqc!.series.map((s) => s.column)).toEqual(["N_re"]);
    expect(naqc!.boundLines.map((b) => b.value)).toEqual([BOUNDS.re]);
  });

  it("hierarchy: one panel, three curves, three bound lines from the constants file", () => {
    const fig = buildFigure(
      spec({ kind: "hierarchy", csv: ["dayabay.csv"], bounds: "bounds.json" }),
      { tables: [table("dayabay.csv")], bounds: BOUNDS }
    );
    expect(fig.panels).toHaveLength(1);
    const p = fig.panels[0]!;
    expect(p.series.map((s) => s.column)).toEqual(["N_l1", "N_re", "N_sk"]);
    expect(p.boundLines.map((b) => [b.measure, b.value])).toEqual([
      ["l1", BOUNDS.l1],
      ["re", BOUNDS.re],
      ["sk", BOUNDS.sk],
    ]);
    expect(() =>
      buildFigure(spec({ kind: "hierarchy", csv: ["dayabay.csv"] }), {
        tables: [table("dayabay.csv")],
        bounds: null,
      })
    ).toThrow(/bounds/);
  });

  it("wp_vs_pw: sorts the pair by model column, dashes the plane wave", () => {
    const tables = [table("angle20_planewave.csv"), table("angle20_wavepacket.csv")];
    const fig = buildFigure(
      spec({ kind: "wp_vs_pw", csv: ["angle20_planewave.csv", "angle20_wavepacket.csv"] }),
      { tables, bounds: BOUNDS }
    );
    const p = fig.panels[0]!;
    expect(p.series).toHaveLength(2);
    const [solid, dashed] = p.series;
    expect(solid!.source).toBe("angle20_wavepacket.csv");
    expect(solid!.dash).toBeUndefined();
    expect(dashed!.source).toBe("angle20_planewave.csv");
    expect(dashed!.dash).toBeTruthy();
  });

  it("wp_vs_pw: rejects a pair that is not one of each model", () => {
    const tables = [table("angle20_wavepacket.csv"), table("dayabay.csv")];
    expect(() =>
      buildFigure(spec({ kind: "wp_vs_pw", csv: ["a.csv", "b.csv"] }), {
        tables,
        bounds: null,
      })
    ).toThrow(SpecError);
  });

  it("plots the CSV values verbatim", () => {
    const text = fixture("minos.csv");
    const fig = buildFigure(spec({ kind: "hierarchy", csv: ["m.csv"], bounds: "b.json" }), {
      tables: [table("m.csv", text)],
      bounds: BOUNDS,
    });
    const p = fig.panels[0]!;
    for (const [col, series] of [
      ["N_l1", p.series[0]!],
      ["N_re", p.series[1]!],
      ["N_sk", p.series[2]!],
    ] as const) {
      const want = numColumn(text, col);
      expect(series.y).toHaveLength(want.length);
      for (let i = 0; i < want.length; i++) expect(series.y[i]).toBe(want[i]);
    }
    const wantX = numColumn(text, "L_m");
    for (let i = 0; i < wantX.length; i++) expect(p.series[0]!.x[i]).toBe(wantX[i]);
  });

  it("sentinel values pass through untouched", () => {
    const sentinel = 12345.6789;
    const text = patchField(fixture("dayabay.csv"), 60, "N_re", String(sentinel));
    const fig = buildFigure(spec({ kind: "eur_naqc", csv: ["d.csv"] }), {
      tables: [table("d.csv", text)],
      bounds: null,
    });
    const naqc = fig.panels[1]!;
    expect(naqc.series[0]!.y[60]).toBe(sentinel);
    const dump = figureDump(fig) as {
      panels: { series: { y: number[] }[] }[];
    };
    expect(dump.panels[1]!.series[0]!.y[60]).toBe(sentinel);
  });
});

describe("renderFigure", () => {
  const hierarchyFig = () =>
    buildFigure(spec({ kind: "hierarchy", csv: ["kamland.csv"], bounds: "b.json" }), {
      tables: [table("kamland.csv")],
      bounds: BOUNDS,
    });

  it("panel groups match the figure's panels", () => {
    const eur = buildFigure(spec({ kind: "eur_naqc", csv: ["kamland.csv"] }), {
      tables: [table("kamland.csv")],
      bounds: BOUNDS,
    });
    expect(renderFigure(eur).match(/<g class="panel"/g)).toHaveLength(2);
    expect(renderFigure(hierarchyFig()).match(/<g class="panel"/g)).toHaveLength(1);
  });

  it("bound lines carry their drawn value as an attribute", () => {
    const svg = renderFigure(hierarchyFig());
    const drawn = [...svg.matchAll(/<line class="bound" data-measure="(\w+)" data-value="([^"]+)"/g)];
    expect(drawn.map((m) => m[1])).toEqual(["l1", "re", "sk"]);
    expect(drawn.map((m) => Number(m[2]))).toEqual([BOUNDS.l1, BOUNDS.re, BOUNDS.sk]);
  });

  it("dashed styling appears only on the plane-wave series", () => {
    const fig = buildFigure(
      spec({ kind: "wp_vs_pw", csv: ["angle20_wavepacket.csv", "angle20_planewave.csv"] }),
      {
        tables: [table("angle20_wavepacket.csv"), table("angle20_planewave.csv")],
        bounds: null,
      }
    );
    const svg = renderFigure(fig);
    const lines = [...svg.matchAll(/<polyline class="series" data-label="([^"]+)"[^>]*?\/>/g)];
    expect(lines).toHaveLength(2);
    const byLabel = new Map(lines.map((m) => [m[1], m[0]]));
    expect(byLabel.get("N_re (wavepacket)")).not.toContain("stroke-dasharray");
    expect(byLabel.get("N_re (planewave)")).toContain("stroke-dasharray");
  });

  it("renders flat zero-angle data without degenerate coordinates", () => {
    const fig = buildFigure(spec({ kind: "hierarchy", csv: ["flat.csv"], bounds: "b.json" }), {
      tables: [table("flat.csv", constantCsv(24))],
      bounds: BOUNDS,
    });
    const svg = renderFigure(fig);
    expect(svg).not.toContain("NaN");
    expect(svg.match(/<polyline class="series"/g)).toHaveLength(3);
    // all three curves sit at y = 2, so each polyline is a single horizontal level
    for (const m of svg.matchAll(/points="([^"]+)"/g)) {
      const ys = new Set(m[1]!.split(" ").map((pt) => pt.split(",")[1]));
      expect(ys.size).toBe(1);
    }
  });

  it("escapes markup-significant characters in labels", () => {
    const fig = buildFigure(
      spec({ kind: "hierarchy", csv: ["kamland.csv"], bounds: "b.json", title: "a<b & 'c'" }),
      { tables: [table("kamland.csv")], bounds: BOUNDS }
    );
    const svg = renderFigure(fig);
    expect(svg).toContain("a&lt;b &amp; &apos;c&apos;");
    expect(svg).not.toContain("a<b");
  });
});
