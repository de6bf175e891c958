#!/usr/bin/env node
/**
 * figures - render SVG plots from a trifrust run.csv
 *
 * Usage:
 *   figures --in run.csv --out dir [--which monogamy|bipartite|all]
 *
 * Exit codes: 0 ok, 1 bad usage, 2 schema/runtime error.
 */

import { mkdir, readFile, writeFile } from "node:fs/promises";
import path from "node:path";

import { parseRunCsv, SchemaError } from "./csv.js";
import type { FigureKind } from "./render.js";
import { renderFigures } from "./render.js";

const USAGE = "usage: figures --in run.csv --out dir [--which monogamy|bipartite|all]";

interface Args {
  input: string;
  outDir: string;
  which: FigureKind;
}

export function parseArgs(argv: string[]): Args {
  let input: string | undefined;
  let outDir: string | undefined;
  let which: FigureKind = "all";
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    const next = () => {
      const v = argv[++i];
      if (v === undefined) throw new Error(`missing value for ${a}`);
      return v;
    };
    if (a === "--in") input = next();
    else if (a === "--out") outDir = next();
    else if (a === "--which") {
      const v = next();
      if (v !== "monogamy" && v !== "bipartite" && v !== "all") {
        throw new Error(`--which must be monogamy, bipartite or all, got '${v}'`);
      }
      which = v;
    } else throw new Error(`unknown argument '${a}'`);
  }
  if (!input || !outDir) throw new Error("--in and --out are required");
  return { input, outDir, which };
}

export async function main(argv: string[]): Promise<number> {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    console.error(USAGE);
    return 1;
  }

  try {
    const text = await readFile(args.input, "utf-8");
    const rows = parseRunCsv(text);
    const figures = renderFigures(rows, args.which);
    await mkdir(args.outDir, { recursive: true });
    for (const [name, svg] of figures) {
      const target = path.join(args.outDir, name);
      await writeFile(target, svg, "utf-8");
      console.log(`wrote ${target}`);
    }
    console.log(`${rows.length} rows plotted across ${figures.size} figure(s).`);
    return 0;
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error: ${err.message}`);
      return 2;
    }
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${path.resolve(process.argv[1])}`).href;

if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
