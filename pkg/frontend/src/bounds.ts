/**
 * NAQC bound constants, read from the JSON file the pipeline emits
 * (`nunaqc constants --out bounds.json`). The values are never typed
 * into this package; the generated file is the only source.
 */

export const MEASURES = ["l1", "re", "sk"] as const;

export type Measure = (typeof MEASURES)[number];

export type NaqcBounds = Record<Measure, number>;

export class BoundsError extends Error {}

export function parseBounds(text: string, source = "<bounds>"): NaqcBounds {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    throw new BoundsError(`${source}: not valid JSON`);
  }
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new BoundsError(`${source}: expected an object with keys l1, re, sk`);
  }
  const out: Partial<NaqcBounds> = {};
  for (const key of MEASURES) {
    const v = (raw as Record<string, unknown>)[key];
    if (typeof v !== "number" || !Number.isFinite(v)) {
      throw new BoundsError(`${source}: missing numeric bound "${key}"`);
    }
    out[key] = v;
  }
  return out as NaqcBounds;
}
