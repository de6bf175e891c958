/**
 * Minimal SVG line-chart builder: one panel per call, optional right axis.
 *
 * Every data point is drawn as a <circle class="pt s-..."> so downstream
 * checks can count plotted points per series.
 */

export interface SeriesSpec {
  label: string;
  cssKey: string; // class suffix, e.g. "frustrated-exact"
  color: string;
  dash?: string;
  axis?: "left" | "right";
  points: Array<{ x: number; y: number }>;
}

export interface PanelSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  rightYLabel?: string;
  series: SeriesSpec[];
}

const W = 640;
const PANEL_H = 300;
const ML = 64;
const MT = 34;
const MB = 46;

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const mag = Math.pow(10, Math.floor(Math.log10(rough)));
  const step = [1, 2, 5, 10].map((m) => m * mag).find((n) => n >= rough) ?? rough;
  const start = Math.ceil(min / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= max + step * 1e-9; v += step) ticks.push(v);
  return ticks;
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.01 && a < 1000) return String(Number(v.toPrecision(3)));
  return v.toExponential(1);
}

function extent(vals: number[], lo?: number): [number, number] {
  if (vals.length === 0) return [lo ?? 0, 1];
  let min = Math.min(...vals);
  let max = Math.max(...vals);
  if (lo !== undefined) min = Math.min(lo, min);
  if (min === max) {
    min -= 0.5;
    max += 0.5;
  }
  const pad = (max - min) * 0.06;
  return [min === 0 ? 0 : min - pad, max + pad];
}

/** Render one chart panel as a <g> positioned at vertical offset `yOff`. */
export function renderPanel(spec: PanelSpec, yOff: number): string {
  const hasRight = spec.series.some((s) => s.axis === "right") && spec.rightYLabel;
  const mr = hasRight ? 64 : 24;
  const pw = W - ML - mr;
  const ph = PANEL_H - MT - MB;

  const xs = spec.series.flatMap((s) => s.points.map((p) => p.x));
  const [xMin, xMax] = extent(xs, 0);
  const xOf = (v: number) => ML + ((v - xMin) / (xMax - xMin || 1)) * pw;

  const leftVals = spec.series.filter((s) => s.axis !== "right").flatMap((s) => s.points.map((p) => p.y));
  const [yMin, yMax] = extent(leftVals, 0);
  const yOf = (v: number) => MT + ph - ((v - yMin) / (yMax - yMin || 1)) * ph;

  const rightVals = spec.series.filter((s) => s.axis === "right").flatMap((s) => s.points.map((p) => p.y));
  const [rMin, rMax] = extent(rightVals, 0);
  const rOf = (v: number) => MT + ph - ((v - rMin) / (rMax - rMin || 1)) * ph;

  let g = `<g transform="translate(0,${yOff})">\n`;
  g += `<text x="${ML}" y="${MT - 12}" font-size="12" font-weight="600" fill="#222">${esc(spec.title)}</text>\n`;

  for (const v of niceTicks(yMin, yMax, 5)) {
    const y = yOf(v);
    g += `<line x1="${ML}" y1="${y.toFixed(1)}" x2="${ML + pw}" y2="${y.toFixed(1)}" stroke="#eee" stroke-width="0.6"/>\n`;
    g += `<text x="${ML - 6}" y="${(y + 3).toFixed(1)}" text-anchor="end" font-size="9" fill="#555">${esc(fmt(v))}</text>\n`;
  }
  for (const v of niceTicks(xMin, xMax, 7)) {
    const x = xOf(v);
    g += `<line x1="${x.toFixed(1)}" y1="${MT + ph}" x2="${x.toFixed(1)}" y2="${MT + ph + 4}" stroke="#333" stroke-width="0.6"/>\n`;
    g += `<text x="${x.toFixed(1)}" y="${MT + ph + 15}" text-anchor="middle" font-size="9" fill="#555">${esc(fmt(v))}</text>\n`;
  }
  if (hasRight) {
    for (const v of niceTicks(rMin, rMax, 5)) {
      const y = rOf(v);
      g += `<line x1="${ML + pw}" y1="${y.toFixed(1)}" x2="${ML + pw + 4}" y2="${y.toFixed(1)}" stroke="#333" stroke-width="0.6"/>\n`;
      g += `<text x="${ML + pw + 6}" y="${(y + 3).toFixed(1)}" text-anchor="start" font-size="9" fill="#777">${esc(fmt(v))}</text>\n`;
    }
    g += `<text x="${W - 14}" y="${MT + ph / 2}" text-anchor="middle" font-size="10" fill="#777" transform="rotate(90,${W - 14},${MT + ph / 2})">${esc(spec.rightYLabel!)}</text>\n`;
  }

  for (const s of spec.series) {
    const scale = s.axis === "right" ? rOf : yOf;
    const pts = [...s.points].sort((a, b) => a.x - b.x);
    if (pts.length > 1) {
      const path = pts.map((p) => `${xOf(p.x).toFixed(1)},${scale(p.y).toFixed(1)}`).join(" ");
      g += `<polyline fill="none" stroke="${s.color}" stroke-width="1.3" ${s.dash ? `stroke-dasharray="${s.dash}"` : ""} points="${path}"/>\n`;
    }
    for (const p of pts) {
      g += `<circle class="pt s-${esc(s.cssKey)}" cx="${xOf(p.x).toFixed(1)}" cy="${scale(p.y).toFixed(1)}" r="2.4" fill="${s.color}"/>\n`;
    }
  }

  g += `<line x1="${ML}" y1="${MT}" x2="${ML}" y2="${MT + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  g += `<line x1="${ML}" y1="${MT + ph}" x2="${ML + pw}" y2="${MT + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  if (hasRight) {
    g += `<line x1="${ML + pw}" y1="${MT}" x2="${ML + pw}" y2="${MT + ph}" stroke="#333" stroke-width="0.8"/>\n`;
  }
  g += `<text x="${ML + pw / 2}" y="${MT + ph + 32}" text-anchor="middle" font-size="10" fill="#333">${esc(spec.xLabel)}</text>\n`;
  g += `<text x="16" y="${MT + ph / 2}" text-anchor="middle" font-size="10" fill="#333" transform="rotate(-90,16,${MT + ph / 2})">${esc(spec.yLabel)}</text>\n`;

  let ly = MT + 8;
  for (const s of spec.series) {
    const lx = ML + 10;
    g += `<line x1="${lx}" y1="${ly}" x2="${lx + 16}" y2="${ly}" stroke="${s.color}" stroke-width="1.3" ${s.dash ? `stroke-dasharray="${s.dash}"` : ""}/>\n`;
    g += `<text x="${lx + 20}" y="${ly + 3}" font-size="8.5" fill="#444">${esc(s.label)}</text>\n`;
    ly += 11;
  }
  g += `</g>\n`;
  return g;
}

/** Wrap stacked panels into a complete SVG document. */
export function svgDocument(panels: PanelSpec[]): string {
  const h = PANEL_H * panels.length;
  let s = `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${W} ${h}" font-family="Helvetica, Arial, sans-serif">\n`;
  s += `<rect width="${W}" height="${h}" fill="#fff"/>\n`;
  panels.forEach((p, i) => {
    s += renderPanel(p, i * PANEL_H);
  });
  s += `</svg>\n`;
  return s;
}
