import { readFileSync } from "fs";
import { describe, expect, it } from "vitest";

import { ColumnError, SchemaError, column, parseArtifact } from "../src/csv.js";

const FIXTURE = new URL("../fixtures/fig_barrier_1d.csv", import.meta.url);

describe("parseArtifact", () => {
  it("reads metadata, columns and numeric rows", () => {
    const artifact = parseArtifact(readFileSync(FIXTURE, "utf-8"));
    expect(artifact.meta.schema).toBe("1");
    expect(artifact.meta.experiment).toBe("fig_barrier_1d");
    expect(artifact.columns[0]).toBe("l_over_a");
    expect(artifact.rows.length).toBeGreaterThan(10);
    const same = column(artifact, "f_lattice_same_sign");
    const opp = column(artifact, "f_lattice_opposite_sign");
    expect(Math.min(...same)).toBeLessThan(0);
    expect(Math.min(...opp)).toBeGreaterThan(0);
  });

  it("rejects unsupported schema versions", () => {
    const text = "# schema=2\na,b\n1,2\n";
    expect(() => parseArtifact(text)).toThrow(SchemaError);
  });

  it("rejects artifacts without a schema line", () => {
    expect(() => parseArtifact("a,b\n1,2\n")).toThrow(SchemaError);
  });

  it("accepts header-only artifacts", () => {
    const artifact = parseArtifact("# schema=1\nl_over_a,f\n");
    expect(artifact.columns).toEqual(["l_over_a", "f"]);
    expect(artifact.rows).toEqual([]);
  });

  it("rejects non-numeric cells", () => {
    expect(() => parseArtifact("# schema=1\na\nnope\n")).toThrow(ColumnError);
  });

  it("flags missing columns on access", () => {
    const artifact = parseArtifact("# schema=1\na\n1\n");
    expect(() => column(artifact, "b")).toThrow(ColumnError);
  });
});
