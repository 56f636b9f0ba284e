/**
 * Figure catalogue: which artifact columns each figure plots and how.
 * Lattice curves are solid red tones, continuum references solid black/gray,
 * large-separation asymptotes dashed.
 */

import { Artifact, ColumnError, column } from "./csv.js";
import { Layout, Series } from "./svg.js";

export type FigureId = "barrier1d" | "spike" | "barrier2d" | "protection" | "abelplana";

export interface FigureSpec {
  fig: FigureId;
  input: string;
  output: string;
}

interface CurveDef {
  column: string;
  label: string;
  color: string;
  dashed?: boolean;
}

interface FigureDef {
  xColumn: string;
  layout: Omit<Layout, "width" | "height">;
  curves?: CurveDef[];
  /** one curve of `valueColumn` per distinct value of `groupColumn` */
  grouped?: { groupColumn: string; valueColumn: string; labelPrefix: string };
}

const LATTICE_RED = "#c62828";
const LATTICE_ORANGE = "#e07b00";
const CONTINUUM_BLACK = "#000000";
const CONTINUUM_GRAY = "#666666";
const GROUP_PALETTE = ["#c62828", "#e07b00", "#2e6db4", "#3a8f3a", "#7b4fa6", "#8a6d1a"];

export const FIGURES: Record<FigureId, FigureDef> = {
  barrier1d: {
    xColumn: "l_over_a",
    layout: {
      title: "Free energy between extended mass barriers (1D)",
      xLabel: "L / a",
      yLabel: "L F / v_f",
    },
    curves: [
      { column: "f_lattice_same_sign", label: "lattice, same sign", color: LATTICE_RED },
      { column: "f_lattice_opposite_sign", label: "lattice, opposite sign", color: LATTICE_ORANGE },
      { column: "f_continuum_same", label: "continuum, same sign", color: CONTINUUM_BLACK },
      { column: "f_continuum_opposite", label: "continuum, opposite sign", color: CONTINUUM_GRAY },
      { column: "f_asymptote_same", label: "asymptote, same sign", color: CONTINUUM_BLACK, dashed: true },
      { column: "f_asymptote_opposite", label: "asymptote, opposite sign", color: CONTINUUM_GRAY, dashed: true },
    ],
  },
  spike: {
    xColumn: "mu0_a_over_vf",
    layout: {
      title: "Free energy of two one-site mass spikes",
      xLabel: "a mu0 / v_f",
      yLabel: "L F / v_f",
    },
    curves: [
      { column: "f_lattice", label: "lattice", color: LATTICE_RED },
      { column: "f_continuum", label: "continuum", color: CONTINUUM_BLACK },
    ],
  },
  barrier2d: {
    xColumn: "l_over_a",
    layout: {
      title: "Free energy between extended mass barriers (2D surface)",
      xLabel: "L / a",
      yLabel: "L^2 F / (v_f W)",
    },
    curves: [
      { column: "f_lattice_same_sign", label: "lattice, same sign", color: LATTICE_RED },
      { column: "f_lattice_opposite_sign", label: "lattice, opposite sign", color: LATTICE_ORANGE },
      { column: "f_continuum_same", label: "continuum, same sign", color: CONTINUUM_BLACK },
      { column: "f_continuum_opposite", label: "continuum, opposite sign", color: CONTINUUM_GRAY },
      { column: "f_asymptote_same", label: "asymptote, same sign", color: CONTINUUM_BLACK, dashed: true },
      { column: "f_asymptote_opposite", label: "asymptote, opposite sign", color: CONTINUUM_GRAY, dashed: true },
    ],
  },
  protection: {
    xColumn: "l_over_a",
    layout: {
      title: "Staggered potential: effective-length collapse",
      xLabel: "L / a",
      yLabel: "L_eff F / v_f",
    },
    grouped: {
      groupColumn: "v0_a_over_vf",
      valueColumn: "f_times_l_eff",
      labelPrefix: "v0 a/v_f = ",
    },
  },
  abelplana: {
    xColumn: "l_over_a",
    layout: {
      title: "Hard-wall zero-point energy coefficient",
      xLabel: "L / a",
      yLabel: "(ln2/tau - dF) L / v_f",
    },
    curves: [
      { column: "coefficient", label: "boundary-integral value", color: LATTICE_RED },
      { column: "asymptote_coefficient", label: "asymptote", color: CONTINUUM_BLACK, dashed: true },
    ],
  },
};

export function figureSeries(fig: FigureId, artifact: Artifact): { series: Series[]; layout: Omit<Layout, "width" | "height"> } {
  const def = FIGURES[fig];
  const x = column(artifact, def.xColumn);
  const series: Series[] = [];
  if (def.curves) {
    for (const curve of def.curves) {
      series.push({
        label: curve.label,
        x,
        y: column(artifact, curve.column),
        color: curve.color,
        dashed: curve.dashed,
      });
    }
  }
  if (def.grouped) {
    const keys = column(artifact, def.grouped.groupColumn);
    const values = column(artifact, def.grouped.valueColumn);
    const groups = [...new Set(keys)].sort((a, b) => a - b);
    groups.forEach((key, i) => {
      const pick = keys.map((k, j) => j).filter((j) => keys[j] === key);
      series.push({
        label: `${def.grouped!.labelPrefix}${key}`,
        x: pick.map((j) => x[j]),
        y: pick.map((j) => values[j]),
        color: GROUP_PALETTE[i % GROUP_PALETTE.length],
      });
    });
  }
  if (series.length === 0) {
    throw new ColumnError(`figure ${fig} defines no curves`);
  }
  return { series, layout: def.layout };
}
