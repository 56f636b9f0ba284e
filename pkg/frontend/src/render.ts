#!/usr/bin/env node
/**
 * render --fig barrier1d --in data.csv --out fig1.svg
 *
 * Reads one schema-1 CSV artifact produced by the casimir CLI and writes an
 * SVG figure.  Exits nonzero on schema mismatch, missing columns or
 * unreadable input; a header-only artifact yields empty axes and a warning.
 */

import { readFileSync, writeFileSync } from "fs";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { parseArtifact, SchemaError, ColumnError } from "./csv.js";
import { FIGURES, FigureId, FigureSpec, figureSeries } from "./figures.js";
import { renderFigure } from "./svg.js";

const WIDTH = 640;
const HEIGHT = 420;

export function renderToFile(spec: FigureSpec): void {
  const text = readFileSync(spec.input, "utf-8");
  const artifact = parseArtifact(text);
  const { series, layout } = figureSeries(spec.fig, artifact);
  if (artifact.rows.length === 0) {
    console.warn(`warning: ${spec.input} has no data rows; rendering empty axes`);
  }
  const svg = renderFigure(series, { ...layout, width: WIDTH, height: HEIGHT });
  writeFileSync(spec.output, svg);
}

export function main(argv: string[]): number {
  const args = yargs(argv)
    .option("fig", {
      choices: Object.keys(FIGURES) as FigureId[],
      demandOption: true,
      describe: "figure to render",
    })
    .option("in", {
      type: "string",
      demandOption: true,
      describe: "input CSV artifact (schema 1)",
    })
    .option("out", {
      type: "string",
      demandOption: true,
      describe: "output SVG path",
    })
    .strict()
    .exitProcess(false)
    .parseSync();

  try {
    renderToFile({ fig: args.fig, input: args.in, output: args.out });
  } catch (err) {
    if (err instanceof SchemaError || err instanceof ColumnError) {
      console.error(`error: ${err.message}`);
      return 1;
    }
    if (err instanceof Error && "code" in err) {
      console.error(`error: cannot read input: ${err.message}`);
      return 1;
    }
    throw err;
  }
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("render.js")) {
  process.exit(main(hideBin(process.argv)));
}
