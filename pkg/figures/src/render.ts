/**
 * Figure assembly: maps run.csv rows onto the three output SVGs.
 *
 *   delta_N2.svg  - entanglement monogamy score vs |J|/h
 *   delta_D.svg   - discord monogamy score vs |J|/h, with the pseudo-pure
 *                   mixed-state score on a secondary right-hand axis
 *   bipartite.svg - N12 and D12 vs |J|/h, stacked panels
 */

import type { RunRow } from "./csv.js";
import { seriesKeys } from "./csv.js";
import type { PanelSpec, SeriesSpec } from "./chart.js";
import { svgDocument } from "./chart.js";

export type FigureKind = "monogamy" | "bipartite" | "all";

const REGIME_COLORS: Record<string, string> = {
  frustrated: "#c1272d",
  nonfrustrated: "#1f77b4",
};

const MODE_DASH: Record<string, string | undefined> = {
  exact: undefined,
  trotter2: "5,3",
};

function color(regime: string): string {
  return REGIME_COLORS[regime] ?? "#555";
}

function makeSeries(
  rows: RunRow[],
  field: keyof RunRow,
  opts: { axis?: "left" | "right"; suffix?: string; dashOverride?: string } = {},
): SeriesSpec[] {
  const out: SeriesSpec[] = [];
  for (const { regime, mode } of seriesKeys(rows)) {
    const sel = rows.filter((r) => r.regime === regime && r.mode === mode);
    out.push({
      label: `${regime}, ${mode}${opts.suffix ? ` ${opts.suffix}` : ""}`,
      cssKey: `${regime}-${mode}${opts.suffix ? `-${opts.suffix}` : ""}`,
      color: color(regime),
      dash: opts.dashOverride ?? MODE_DASH[mode],
      axis: opts.axis ?? "left",
      points: sel.map((r) => ({ x: Math.abs(r.J_over_h), y: r[field] as number })),
    });
  }
  return out;
}

export function monogamyEntanglementFigure(rows: RunRow[]): string {
  const panel: PanelSpec = {
    title: "Entanglement monogamy score",
    xLabel: "|J|/h",
    yLabel: "delta_N2",
    series: makeSeries(rows, "delta_N2"),
  };
  return svgDocument([panel]);
}

export function monogamyDiscordFigure(rows: RunRow[]): string {
  const panel: PanelSpec = {
    title: "Discord monogamy score (right axis: pseudo-pure mixed state)",
    xLabel: "|J|/h",
    yLabel: "delta_D",
    rightYLabel: "delta_D (mixed)",
    series: [
      ...makeSeries(rows, "delta_D"),
      ...makeSeries(rows, "delta_D_mixed", { axis: "right", suffix: "mixed", dashOverride: "2,2" }),
    ],
  };
  return svgDocument([panel]);
}

export function bipartiteFigure(rows: RunRow[]): string {
  const n12: PanelSpec = {
    title: "Bipartite negativity N12",
    xLabel: "|J|/h",
    yLabel: "N12",
    series: makeSeries(rows, "N12"),
  };
  const d12: PanelSpec = {
    title: "Bipartite quantum discord D12",
    xLabel: "|J|/h",
    yLabel: "D12",
    series: makeSeries(rows, "D12"),
  };
  return svgDocument([n12, d12]);
}

/** File name -> SVG text for the requested figure set. */
export function renderFigures(rows: RunRow[], which: FigureKind): Map<string, string> {
  const out = new Map<string, string>();
  if (which === "monogamy" || which === "all") {
    out.set("delta_N2.svg", monogamyEntanglementFigure(rows));
    out.set("delta_D.svg", monogamyDiscordFigure(rows));
  }
  if (which === "bipartite" || which === "all") {
    out.set("bipartite.svg", bipartiteFigure(rows));
  }
  return out;
}
