import type { CurveSpec, Point } from "./csv.js";

export interface Curve {
  label: string;
  points: Point[];
}

export interface ChartOptions {
  title: string;
  width?: number;
  height?: number;
}

/** Structure-name colors: full/balanced green, optimal purple, centroid red,
 * splaynet blue. Unknown labels fall back to a fixed palette. */
export const CURVE_COLORS: Record<string, string> = {
  "static-balanced": "#2ca02c",
  "static-optimal": "#9467bd",
  "centroid-splaynet": "#d62728",
  splaynet: "#1f77b4",
};

const FALLBACK_PALETTE = [
  "#ff7f0e",
  "#8c564b",
  "#e377c2",
  "#7f7f7f",
  "#bcbd22",
  "#17becf",
];

export function colorFor(label: string, index: number): string {
  return CURVE_COLORS[label] ?? FALLBACK_PALETTE[index % FALLBACK_PALETTE.length];
}

const MARGIN = { top: 40, right: 160, bottom: 48, left: 64 };

function niceTicks(lo: number, hi: number, count: number): number[] {
  if (hi === lo) {
    return [lo];
  }
  const rawStep = (hi - lo) / Math.max(1, count);
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const norm = rawStep / mag;
  const step = (norm >= 5 ? 10 : norm >= 2 ? 5 : norm >= 1 ? 2 : 1) * mag;
  const ticks: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step / 1e6; t += step) {
    ticks.push(Number(t.toPrecision(12)));
  }
  return ticks;
}

function fmt(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Render the curves as a standalone SVG string. Pure function of its
 * arguments: no timestamps or random identifiers are embedded. */
export function renderChart(curves: Curve[], options: ChartOptions): string {
  if (curves.length === 0) {
    throw new Error("at least one curve is required");
  }
  const width = options.width ?? 820;
  const height = options.height ?? 480;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs = curves.flatMap((c) => c.points.map((p) => p.x));
  const ys = curves.flatMap((c) => c.points.map((p) => p.y));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = Math.min(...ys, 0);
  let yMax = Math.max(...ys);
  if (yMax === yMin) {
    yMax = yMin + 1;
  }
  const sx = (x: number) =>
    MARGIN.left + (xMax === xMin ? plotW / 2 : ((x - xMin) / (xMax - xMin)) * plotW);
  const sy = (y: number) => MARGIN.top + plotH - ((y - yMin) / (yMax - yMin)) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="16" font-weight="bold">${escapeXml(options.title)}</text>`,
  );

  for (const t of niceTicks(xMin, xMax, 8)) {
    const x = sx(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${MARGIN.top}" x2="${fmt(x)}" y2="${MARGIN.top + plotH}" stroke="#e0e0e0"/>`,
    );
    parts.push(
      `<text x="${fmt(x)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" font-size="11">${fmt(t)}</text>`,
    );
  }
  for (const t of niceTicks(yMin, yMax, 6)) {
    const y = sy(t);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + plotW}" y2="${fmt(y)}" stroke="#e0e0e0"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${fmt(y + 4)}" text-anchor="end" font-size="11">${fmt(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="#444"/>`,
  );
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" text-anchor="middle" font-size="13">request index</text>`,
  );
  parts.push(
    `<text x="18" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${MARGIN.top + plotH / 2})">cumulative average cost</text>`,
  );

  curves.forEach((curve, i) => {
    const color = colorFor(curve.label, i);
    const coords = curve.points
      .map((p) => `${fmt(sx(p.x))},${fmt(sy(p.y))}`)
      .join(" ");
    parts.push(
      `<polyline data-label="${escapeXml(curve.label)}" points="${coords}" fill="none" stroke="${color}" stroke-width="2"/>`,
    );
    const ly = MARGIN.top + 12 + i * 20;
    const lx = MARGIN.left + plotW + 12;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${lx + 28}" y="${ly + 4}" font-size="12">${escapeXml(curve.label)}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}

/** Convenience wrapper used by the CLI: load every spec and render. */
export function renderFromSpecs(
  specs: CurveSpec[],
  load: (spec: CurveSpec) => Point[],
  title: string,
): string {
  const curves = specs.map((spec) => ({ label: spec.label, points: load(spec) }));
  return renderChart(curves, { title });
}
