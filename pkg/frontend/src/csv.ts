/**
 * Parser for the casimir CLI's CSV artifacts: `#`-prefixed metadata lines
 * (schema, experiment, config echo, units, build) followed by an RFC-4180
 * table of numeric columns.
 */

import Papa from "papaparse";

export const SUPPORTED_SCHEMA = "1";

export class SchemaError extends Error {}

export class ColumnError extends Error {}

export interface Artifact {
  meta: Record<string, string>;
  columns: string[];
  rows: number[][];
}

export function parseArtifact(text: string): Artifact {
  const meta: Record<string, string> = {};
  const dataLines: string[] = [];
  for (const raw of text.split(/\r?\n/)) {
    if (raw.startsWith("#")) {
      const body = raw.slice(1).trim();
      const eq = body.match(/^([A-Za-z_][\w-]*)=(.*)$/);
      const colon = body.match(/^([A-Za-z_][\w-]*):\s*(.*)$/);
      if (eq) meta[eq[1]] = eq[2];
      else if (colon) meta[colon[1]] = colon[2];
      continue;
    }
    if (raw.trim() !== "") dataLines.push(raw);
  }
  if (meta["schema"] !== SUPPORTED_SCHEMA) {
    throw new SchemaError(
      `unsupported schema ${JSON.stringify(meta["schema"] ?? null)}; expected ${SUPPORTED_SCHEMA}`,
    );
  }
  if (dataLines.length === 0) {
    throw new ColumnError("artifact has no column header line");
  }
  const parsed = Papa.parse<string[]>(dataLines.join("\n"), {
    delimiter: ",",
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new ColumnError(`malformed CSV: ${parsed.errors[0].message}`);
  }
  const [header, ...body] = parsed.data;
  const rows = body.map((cells) =>
    cells.map((cell) => {
      const value = Number(cell);
      if (!Number.isFinite(value)) {
        throw new ColumnError(`non-numeric cell ${JSON.stringify(cell)}`);
      }
      return value;
    }),
  );
  return { meta, columns: header, rows };
}

/** Column values by name; throws ColumnError when the column is absent. */
export function column(artifact: Artifact, name: string): number[] {
  const index = artifact.columns.indexOf(name);
  if (index < 0) {
    throw new ColumnError(`missing column ${JSON.stringify(name)}`);
  }
  return artifact.rows.map((row) => row[index]);
}
