/**
 * Hand-rolled SVG renderer for assembled figures.
 *
 * Each panel becomes a <g class="panel" data-panel="..."> group. Series are
 * polylines (stroke-dasharray carries the dashed style); bound overlays are
 * horizontal <line class="bound"> elements tagged with data-measure and
 * data-value so the drawn value is machine-checkable.
 */

import { type BoundLine, type Figure, type Panel, type Series } from "./series.js";

const PANEL_W = 380;
const PANEL_H = 260;
const ML = 62;
const MR = 14;
const MT = 16;
const MB = 46;
const GAP = 20;
const TITLE_H = 26;

export function esc(s: string): string {
  return s
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&apos;");
}

export function niceTicks(min: number, max: number, count: number): number[] {
  const span = max - min;
  if (!(span > 0) || !Number.isFinite(span)) return [min];
  const step0 = span / Math.max(1, count);
  const mag = Math.pow(10, Math.floor(Math.log10(step0)));
  const norm = step0 / mag;
  const step = (norm >= 5 ? 10 : norm >= 2 ? 5 : norm >= 1 ? 2 : 1) * mag;
  const start = Math.ceil(min / step) * step;
  const out: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) out.push(v);
  return out;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e5 || a < 1e-2) return v.toExponential(1).replace("e+", "e");
  return String(Number(v.toPrecision(4)));
}

type Range = { min: number; max: number };

/** Pad degenerate or near-degenerate ranges so flat data still renders. */
function padded(r: Range): Range {
  let { min, max } = r;
  const span = max - min;
  const pad = span > 0 ? span * 0.06 : Math.max(Math.abs(max), 1) * 0.1;
  min -= pad;
  max += pad;
  return { min, max };
}

function dataRange(values: number[]): Range {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  return { min, max };
}

function panelSvg(panel: Panel, ox: number, oy: number): string {
  const pw = PANEL_W - ML - MR;
  const ph = PANEL_H - MT - MB;
  const left = ox + ML;
  const top = oy + MT;

  const xr = padded(dataRange(panel.series.flatMap((s) => s.x)));
  const yr = padded(
    dataRange([
      ...panel.series.flatMap((s) => s.y),
      ...panel.boundLines.map((b) => b.value),
    ])
  );
  const xOf = (v: number) => left + ((v - xr.min) / (xr.max - xr.min)) * pw;
  const yOf = (v: number) => top + ph - ((v - yr.min) / (yr.max - yr.min)) * ph;

  let s = `<g class="panel" data-panel="${esc(panel.name)}">\n`;

  // Grid + y ticks
  const yTicks = niceTicks(yr.min, yr.max, 5);
  for (const v of yTicks) {
    const y = yOf(v).toFixed(1);
    s += `<line x1="${left}" y1="${y}" x2="${left + pw}" y2="${y}" stroke="#eee" stroke-width="0.6"/>\n`;
    s += `<text x="${left - 6}" y="${(yOf(v) + 3).toFixed(1)}" text-anchor="end" font-size="9" fill="#555">${esc(fmtTick(v))}</text>\n`;
  }

  // Bound overlays
  for (const b of panel.boundLines) {
    const y = yOf(b.value).toFixed(1);
    s += `<line class="bound" data-measure="${esc(b.measure)}" data-value="${String(b.value)}" `;
    s += `x1="${left}" y1="${y}" x2="${left + pw}" y2="${y}" stroke="${b.color}" stroke-width="1" stroke-dasharray="3,3" opacity="0.8"/>\n`;
  }

  // Series
  for (const sr of panel.series) {
    const pts = sr.x
      .map((xv, i) => `${xOf(xv).toFixed(1)},${yOf(sr.y[i]!).toFixed(1)}`)
      .join(" ");
    s += `<polyline class="series" data-label="${esc(sr.label)}" data-column="${esc(sr.column)}" `;
    s += `fill="none" stroke="${sr.color}" stroke-width="1.4" ${sr.dash ? `stroke-dasharray="${sr.dash}" ` : ""}points="${pts}"/>\n`;
  }

  // Axes frame
  s += `<line x1="${left}" y1="${top}" x2="${left}" y2="${top + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  s += `<line x1="${left}" y1="${top + ph}" x2="${left + pw}" y2="${top + ph}" stroke="#333" stroke-width="0.8"/>\n`;

  // X ticks + labels
  for (const v of niceTicks(xr.min, xr.max, 5)) {
    const x = xOf(v).toFixed(1);
    s += `<line x1="${x}" y1="${top + ph}" x2="${x}" y2="${top + ph + 4}" stroke="#333" stroke-width="0.6"/>\n`;
    s += `<text x="${x}" y="${top + ph + 15}" text-anchor="middle" font-size="9" fill="#555">${esc(fmtTick(v))}</text>\n`;
  }
  s += `<text x="${left + pw / 2}" y="${oy + PANEL_H - 8}" text-anchor="middle" font-size="10" fill="#333">${esc(panel.xLabel)}</text>\n`;
  const ylx = ox + 14;
  const yly = top + ph / 2;
  s += `<text x="${ylx}" y="${yly}" text-anchor="middle" font-size="10" fill="#333" transform="rotate(-90,${ylx},${yly})">${esc(panel.yLabel)}</text>\n`;

  // Legend
  const entries: Array<Series | BoundLine> = [...panel.series, ...panel.boundLines];
  const legendW = Math.max(...entries.map((e) => e.label.length)) * 5.5 + 30;
  const lx = left + pw - legendW - 4;
  let ly = top + 8;
  s += `<rect x="${lx - 4}" y="${ly - 6}" width="${legendW + 8}" height="${entries.length * 12 + 6}" rx="2" fill="white" fill-opacity="0.85"/>\n`;
  for (const e of entries) {
    const dash = "dash" in e && e.dash ? e.dash : "measure" in e ? "3,3" : undefined;
    s += `<line x1="${lx}" y1="${ly}" x2="${lx + 16}" y2="${ly}" stroke="${e.color}" stroke-width="1.4"${dash ? ` stroke-dasharray="${dash}"` : ""}/>\n`;
    s += `<text x="${lx + 20}" y="${ly + 3}" font-size="9" fill="#444">${esc(e.label)}</text>\n`;
    ly += 12;
  }

  s += `</g>\n`;
  return s;
}

export function renderFigure(fig: Figure): string {
  const n = fig.panels.length;
  const W = n * PANEL_W + (n - 1) * GAP + 8;
  const H = PANEL_H + TITLE_H;

  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">\n`;
  s += `<rect width="${W}" height="${H}" fill="#fff"/>\n`;
  s += `<text x="${W / 2}" y="17" text-anchor="middle" font-size="12" font-weight="600" fill="#222">${esc(fig.title)}</text>\n`;
  fig.panels.forEach((panel, i) => {
    s += panelSvg(panel, 4 + i * (PANEL_W + GAP), TITLE_H);
  });
  s += `</svg>\n`;
  return s;
}
