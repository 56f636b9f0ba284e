import { mkdtempSync, readFileSync, writeFileSync } from "fs";
import { tmpdir } from "os";
import { join } from "path";
import { fileURLToPath } from "url";
import { describe, expect, it, vi } from "vitest";

import { main } from "../src/render.js";

const fixture = (name: string) =>
  fileURLToPath(new URL(`../fixtures/${name}`, import.meta.url));

function render(fig: string, input: string): string {
  const dir = mkdtempSync(join(tmpdir(), "render-"));
  const out = join(dir, `${fig}.svg`);
  const code = main(["--fig", fig, "--in", input, "--out", out]);
  expect(code).toBe(0);
  return readFileSync(out, "utf-8");
}

const countPolylines = (svg: string) => (svg.match(/<polyline /g) ?? []).length;
const countDashed = (svg: string) =>
  (svg.match(/<polyline [^>]*stroke-dasharray/g) ?? []).length;

function polylinePoints(svg: string): Array<[number, number]> {
  const points: Array<[number, number]> = [];
  for (const match of svg.matchAll(/<polyline points="([^"]+)"/g)) {
    for (const pair of match[1].split(" ")) {
      const [x, y] = pair.split(",").map(Number);
      points.push([x, y]);
    }
  }
  return points;
}

describe("figure rendering", () => {
  it("barrier1d: four curves plus two dashed asymptotes", () => {
    const svg = render("barrier1d", fixture("fig_barrier_1d.csv"));
    expect(countPolylines(svg)).toBe(6);
    expect(countDashed(svg)).toBe(2);
    expect(svg).toContain("L / a");
    expect(svg).toContain("L F / v_f");
    expect(svg).toContain("#c62828"); // solid lattice curve present
  });

  it("barrier2d: same structure with the 2D axis label", () => {
    const svg = render("barrier2d", fixture("fig_barrier_2d.csv"));
    expect(countPolylines(svg)).toBe(6);
    expect(countDashed(svg)).toBe(2);
    expect(svg).toContain("L^2 F / (v_f W)");
  });

  it("spike: lattice and continuum curves, no dashes", () => {
    const svg = render("spike", fixture("fig_spike.csv"));
    expect(countPolylines(svg)).toBe(2);
    expect(countDashed(svg)).toBe(0);
    expect(svg).toContain("a mu0 / v_f");
  });

  it("protection: one collapse curve per staggered amplitude", () => {
    const svg = render("protection", fixture("protection.csv"));
    expect(countPolylines(svg)).toBe(4); // default v0 sweep 0, 0.5, 1, 2
    expect(svg).toContain("v0 a/v_f = 0.5");
  });

  it("abelplana: value curve plus dashed asymptote", () => {
    const svg = render("abelplana", fixture("abel_plana.csv"));
    expect(countPolylines(svg)).toBe(2);
    expect(countDashed(svg)).toBe(1);
  });

  it("keeps every plotted point inside the axes box", () => {
    const svg = render("barrier1d", fixture("fig_barrier_1d.csv"));
    const box = svg.match(/<rect x="([\d.]+)" y="([\d.]+)" width="([\d.]+)" height="([\d.]+)"/);
    expect(box).not.toBeNull();
    const [x0, y0, w, h] = box!.slice(1).map(Number);
    for (const [px, py] of polylinePoints(svg)) {
      expect(px).toBeGreaterThanOrEqual(x0 - 0.01);
      expect(px).toBeLessThanOrEqual(x0 + w + 0.01);
      expect(py).toBeGreaterThanOrEqual(y0 - 0.01);
      expect(py).toBeLessThanOrEqual(y0 + h + 0.01);
    }
  });

  it("is byte-stable across reruns", () => {
    const a = render("barrier1d", fixture("fig_barrier_1d.csv"));
    const b = render("barrier1d", fixture("fig_barrier_1d.csv"));
    expect(Buffer.from(a).equals(Buffer.from(b))).toBe(true);
  });
});

describe("failure modes", () => {
  it("renders empty axes with a warning for header-only input", () => {
    const dir = mkdtempSync(join(tmpdir(), "render-"));
    const input = join(dir, "empty.csv");
    writeFileSync(input, "# schema=1\nmu0_a_over_vf,f_lattice,f_continuum\n");
    const warn = vi.spyOn(console, "warn").mockImplementation(() => {});
    const out = join(dir, "empty.svg");
    const code = main(["--fig", "spike", "--in", input, "--out", out]);
    expect(code).toBe(0);
    expect(warn).toHaveBeenCalledOnce();
    warn.mockRestore();
    const svg = readFileSync(out, "utf-8");
    expect(countPolylines(svg)).toBe(0);
    expect(svg).toContain("<rect"); // axes still drawn
  });

  it("rejects schema mismatches", () => {
    const dir = mkdtempSync(join(tmpdir(), "render-"));
    const input = join(dir, "v2.csv");
    writeFileSync(input, "# schema=2\nmu0_a_over_vf,f_lattice,f_continuum\n1,2,3\n");
    const err = vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--fig", "spike", "--in", input, "--out", join(dir, "x.svg")])).toBe(1);
    expect(err).toHaveBeenCalled();
    err.mockRestore();
  });

  it("rejects artifacts missing expected columns", () => {
    const dir = mkdtempSync(join(tmpdir(), "render-"));
    const input = join(dir, "wrong.csv");
    writeFileSync(input, "# schema=1\nsomething_else\n1\n");
    const err = vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--fig", "spike", "--in", input, "--out", join(dir, "x.svg")])).toBe(1);
    err.mockRestore();
  });

  it("rejects unreadable input paths", () => {
    const err = vi.spyOn(console, "error").mockImplementation(() => {});
    expect(main(["--fig", "spike", "--in", "/nonexistent.csv", "--out", "/tmp/x.svg"])).toBe(1);
    err.mockRestore();
  });
});
