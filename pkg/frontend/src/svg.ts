/**
 * Deterministic SVG line plots: fixed-precision coordinates, no timestamps or
 * generated ids, so re-rendering the same data yields identical bytes.
 */

export interface Series {
  label: string;
  x: number[];
  y: number[];
  color: string;
  dashed?: boolean;
}

export interface Layout {
  width: number;
  height: number;
  xLabel: string;
  yLabel: string;
  title: string;
}

const MARGIN = { top: 34, right: 18, bottom: 46, left: 64 };

function niceStep(rough: number): number {
  const power = Math.pow(10, Math.floor(Math.log10(rough)));
  const base = rough / power;
  if (base <= 1) return power;
  if (base <= 2) return 2 * power;
  if (base <= 5) return 5 * power;
  return 10 * power;
}

export function ticks(lo: number, hi: number, count = 6): number[] {
  if (!(hi > lo)) return [lo];
  const step = niceStep((hi - lo) / Math.max(count - 1, 1));
  const start = Math.ceil(lo / step) * step;
  const out: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    out.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return out;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  const abs = Math.abs(v);
  if (abs >= 0.01 && abs < 10000) {
    return String(Number(v.toPrecision(4)));
  }
  return v.toExponential(1);
}

interface Range {
  lo: number;
  hi: number;
}

function dataRange(values: number[]): Range {
  if (values.length === 0) return { lo: 0, hi: 1 };
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = 0.05 * (hi - lo);
  return { lo: lo - pad, hi: hi + pad };
}

function scale(range: Range, span: [number, number]): (v: number) => number {
  const k = (span[1] - span[0]) / (range.hi - range.lo);
  return (v) => span[0] + (v - range.lo) * k;
}

const fix = (v: number) => v.toFixed(2);

export function renderFigure(series: Series[], layout: Layout): string {
  const innerW: [number, number] = [MARGIN.left, layout.width - MARGIN.right];
  const innerH: [number, number] = [layout.height - MARGIN.bottom, MARGIN.top];
  const xs = series.flatMap((s) => s.x);
  const ys = series.flatMap((s) => s.y);
  const xRange = dataRange(xs);
  const yRange = dataRange(ys);
  const sx = scale(xRange, innerW);
  const sy = scale(yRange, innerH);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${layout.width}" height="${layout.height}" ` +
      `viewBox="0 0 ${layout.width} ${layout.height}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${layout.width}" height="${layout.height}" fill="white"/>`);
  parts.push(
    `<text x="${layout.width / 2}" y="18" text-anchor="middle" font-size="13">${escapeXml(layout.title)}</text>`,
  );

  // axes box
  parts.push(
    `<rect x="${fix(innerW[0])}" y="${fix(innerH[1])}" width="${fix(innerW[1] - innerW[0])}" ` +
      `height="${fix(innerH[0] - innerH[1])}" fill="none" stroke="black" stroke-width="1"/>`,
  );
  for (const t of ticks(xRange.lo, xRange.hi)) {
    const px = sx(t);
    parts.push(
      `<line x1="${fix(px)}" y1="${fix(innerH[0])}" x2="${fix(px)}" y2="${fix(innerH[0] + 4)}" stroke="black"/>`,
    );
    parts.push(
      `<text x="${fix(px)}" y="${fix(innerH[0] + 17)}" text-anchor="middle" font-size="10">${fmtTick(t)}</text>`,
    );
  }
  for (const t of ticks(yRange.lo, yRange.hi)) {
    const py = sy(t);
    parts.push(
      `<line x1="${fix(innerW[0] - 4)}" y1="${fix(py)}" x2="${fix(innerW[0])}" y2="${fix(py)}" stroke="black"/>`,
    );
    parts.push(
      `<text x="${fix(innerW[0] - 7)}" y="${fix(py + 3)}" text-anchor="end" font-size="10">${fmtTick(t)}</text>`,
    );
  }
  if (ys.length > 0 && yRange.lo < 0 && yRange.hi > 0) {
    const zero = sy(0);
    parts.push(
      `<line x1="${fix(innerW[0])}" y1="${fix(zero)}" x2="${fix(innerW[1])}" y2="${fix(zero)}" ` +
        `stroke="#bbbbbb" stroke-width="0.5"/>`,
    );
  }
  parts.push(
    `<text x="${fix((innerW[0] + innerW[1]) / 2)}" y="${layout.height - 10}" text-anchor="middle" ` +
      `font-size="12">${escapeXml(layout.xLabel)}</text>`,
  );
  parts.push(
    `<text x="16" y="${fix((innerH[0] + innerH[1]) / 2)}" text-anchor="middle" font-size="12" ` +
      `transform="rotate(-90 16 ${fix((innerH[0] + innerH[1]) / 2)})">${escapeXml(layout.yLabel)}</text>`,
  );

  for (const s of series) {
    if (s.x.length === 0) continue;
    const points = s.x.map((x, i) => `${fix(sx(x))},${fix(sy(s.y[i]))}`).join(" ");
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(
      `<polyline points="${points}" fill="none" stroke="${s.color}" stroke-width="1.5"${dash}/>`,
    );
  }

  // legend, top-right inside the axes
  let ly = innerH[1] + 14;
  for (const s of series) {
    const x0 = innerW[1] - 150;
    const dash = s.dashed ? ' stroke-dasharray="6 4"' : "";
    parts.push(
      `<line x1="${fix(x0)}" y1="${fix(ly - 3)}" x2="${fix(x0 + 26)}" y2="${fix(ly - 3)}" ` +
        `stroke="${s.color}" stroke-width="1.5"${dash}/>`,
    );
    parts.push(
      `<text x="${fix(x0 + 32)}" y="${fix(ly)}" font-size="10">${escapeXml(s.label)}</text>`,
    );
    ly += 14;
  }

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}
