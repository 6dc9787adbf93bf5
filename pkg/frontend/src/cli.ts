#!/usr/bin/env node
/**
 * plotgen render --spec <spec.json> [--dump-series <path|->]
 *
 * Reads a figure spec, loads the referenced sweep CSVs (and bounds JSON),
 * and writes an SVG. With --dump-series it also emits the exact arrays that
 * were plotted, as JSON, for downstream checks.
 *
 * Paths inside the spec resolve relative to the spec file's directory.
 *
 * Exit codes: 0 ok, 1 bad data (missing column, malformed CSV/bounds),
 * 2 usage or spec error, 3 I/O failure.
 */

import { readFile, writeFile } from "node:fs/promises";
import path from "node:path";
import { pathToFileURL } from "node:url";

import { CsvError, parseSweepCsv } from "./csv.js";
import { BoundsError, parseBounds, type NaqcBounds } from "./bounds.js";
import {
  SpecError,
  buildFigure,
  figureDump,
  parseFigureSpec,
  type CsvTable,
  type FigureSpec,
} from "./series.js";
import { renderFigure } from "./svg.js";

export const EXIT_OK = 0;
export const EXIT_DATA = 1;
export const EXIT_USAGE = 2;
export const EXIT_IO = 3;

const USAGE = "usage: plotgen render --spec <spec.json> [--dump-series <path|->]";

export interface Sink {
  out: (line: string) => void;
  error: (line: string) => void;
}

const CONSOLE_SINK: Sink = { out: console.log, error: console.error };

interface Args {
  specPath: string;
  dumpPath?: string;
}

function parseArgs(argv: string[]): Args {
  if (argv[0] !== "render") {
    throw new SpecError(argv.length === 0 ? USAGE : `unknown command "${argv[0]}"\n${USAGE}`);
  }
  let specPath: string | undefined;
  let dumpPath: string | undefined;
  for (let i = 1; i < argv.length; i++) {
    const flag = argv[i]!;
    if (flag === "--spec" || flag === "--dump-series") {
      const value = argv[++i];
      if (value === undefined) throw new SpecError(`${flag} needs a value\n${USAGE}`);
      if (flag === "--spec") specPath = value;
      else dumpPath = value;
    } else {
      throw new SpecError(`unknown flag "${flag}"\n${USAGE}`);
    }
  }
  if (specPath === undefined) throw new SpecError(`--spec is required\n${USAGE}`);
  const out: Args = { specPath };
  if (dumpPath !== undefined) out.dumpPath = dumpPath;
  return out;
}

async function readText(p: string): Promise<string> {
  return readFile(p, { encoding: "utf8" });
}

async function loadSpec(specPath: string): Promise<FigureSpec> {
  const text = await readText(specPath);
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch {
    throw new SpecError(`${specPath}: not valid JSON`);
  }
  return parseFigureSpec(raw, specPath);
}

async function run(args: Args, sink: Sink): Promise<void> {
  const spec = await loadSpec(args.specPath);
  const baseDir = path.dirname(path.resolve(args.specPath));
  const resolve = (p: string) => path.resolve(baseDir, p);

  const tables: CsvTable[] = [];
  for (const csvPath of spec.csv) {
    const text = await readText(resolve(csvPath));
    tables.push({ source: csvPath, rows: parseSweepCsv(text, csvPath) });
  }
  let bounds: NaqcBounds | null = null;
  if (spec.bounds !== undefined) {
    bounds = parseBounds(await readText(resolve(spec.bounds)), spec.bounds);
  }

  const figure = buildFigure(spec, { tables, bounds });
  const svg = renderFigure(figure);
  const outPath = resolve(spec.out);
  await writeFile(outPath, svg, { encoding: "utf8" });
  sink.out(`wrote ${outPath}`);

  if (args.dumpPath !== undefined) {
    const dump = JSON.stringify(figureDump(figure), null, 2) + "\n";
    if (args.dumpPath === "-") {
      sink.out(dump.trimEnd());
    } else {
      await writeFile(resolve(args.dumpPath), dump, { encoding: "utf8" });
      sink.out(`wrote ${resolve(args.dumpPath)}`);
    }
  }
}

export async function main(argv: string[], sink: Sink = CONSOLE_SINK): Promise<number> {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    sink.error(String((err as Error).message));
    return EXIT_USAGE;
  }
  try {
    await run(args, sink);
    return EXIT_OK;
  } catch (err) {
    if (err instanceof SpecError) {
      sink.error(`error: ${err.message}`);
      return EXIT_USAGE;
    }
    if (err instanceof CsvError || err instanceof BoundsError) {
      sink.error(`error: ${err.message}`);
      return EXIT_DATA;
    }
    if (err instanceof Error && "code" in err) {
      sink.error(`error: ${err.message}`);
      return EXIT_IO;
    }
    throw err;
  }
}

const isMain =
  typeof process.argv[1] === "string" &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (isMain) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
