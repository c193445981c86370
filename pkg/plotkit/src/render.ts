import { writeFileSync } from "node:fs";

import { EmptyInputError, groupSeries, readSweepCsv, Series } from "./csv.js";
import {
  HEIGHT,
  MARGIN,
  WIDTH,
  escapeXml,
  linearTicks,
  logTicks,
  makeScale,
  px,
  seriesColor,
  truncateSig,
} from "./svg.js";

export type XMode = "LOG_N" | "LOGLOG";

export interface PlotSpec {
  input: string;
  mode: XMode;
  groupBy: string;
  output: string;
  title?: string;
  xLabel?: string;
  yLabel?: string;
}

/** Renders the figure and writes it to spec.output; returns the SVG text. */
export function render(spec: PlotSpec): string {
  if (!spec.output.endsWith(".svg")) {
    throw new Error(`unsupported image format for "${spec.output}" (use .svg)`);
  }
  const rows = readSweepCsv(spec.input);
  const series = groupSeries(rows, spec.groupBy);
  const totalPoints = series.reduce((s, line) => s + line.points.length, 0);
  if (totalPoints < 2) {
    throw new EmptyInputError(
      `need at least 2 aggregated (n, mean h) points to draw a line, got ${totalPoints}`
    );
  }
  for (const line of series) {
    if (line.points.length < 2) {
      throw new EmptyInputError(
        `group ${spec.groupBy}=${line.key} has a single point; a line needs >= 2 distinct n`
      );
    }
  }
  const svg = renderSvg(series, spec);
  writeFileSync(spec.output, svg, "utf8");
  return svg;
}

function renderSvg(series: Series[], spec: PlotSpec): string {
  const loglog = spec.mode === "LOGLOG";
  const xs: number[] = [];
  const ys: number[] = [];
  for (const line of series) {
    for (const point of line.points) {
      xs.push(Math.log10(point.n));
      if (loglog && point.meanH <= 0) {
        throw new EmptyInputError(
          `log-log mode needs positive mean h; group ${spec.groupBy}=${line.key} ` +
            `has mean h=${point.meanH} at n=${point.n}`
        );
      }
      ys.push(loglog ? Math.log10(point.meanH) : point.meanH);
    }
  }
  const xScale = makeScale(Math.min(...xs), Math.max(...xs), MARGIN.left, WIDTH - MARGIN.right);
  const yScale = makeScale(Math.min(...ys), Math.max(...ys), HEIGHT - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="sans-serif">`
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  const bottom = HEIGHT - MARGIN.bottom;
  for (const tick of logTicks(xScale)) {
    const x = px(xScale.pixel(tick.value));
    const color = tick.minor ? "#eeeeee" : "#dddddd";
    parts.push(`<line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${bottom}" stroke="${color}"/>`);
    if (!tick.minor) {
      parts.push(
        `<text x="${x}" y="${bottom + 18}" text-anchor="middle" font-size="12">${tick.label}</text>`
      );
    }
  }
  const yTicks = loglog ? logTicks(yScale) : linearTicks(yScale).map((t) => ({ ...t, minor: false }));
  for (const tick of yTicks) {
    const y = px(yScale.pixel(tick.value));
    const minor = "minor" in tick && tick.minor;
    const color = minor ? "#eeeeee" : "#dddddd";
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y}" x2="${WIDTH - MARGIN.right}" y2="${y}" stroke="${color}"/>`
    );
    if (tick.label) {
      parts.push(
        `<text x="${MARGIN.left - 8}" y="${y}" text-anchor="end" dominant-baseline="middle" ` +
          `font-size="12">${tick.label}</text>`
      );
    }
  }
  parts.push(
    `<line x1="${MARGIN.left}" y1="${MARGIN.top}" x2="${MARGIN.left}" y2="${bottom}" stroke="black"/>`,
    `<line x1="${MARGIN.left}" y1="${bottom}" x2="${WIDTH - MARGIN.right}" y2="${bottom}" stroke="black"/>`
  );

  series.forEach((line, index) => {
    const color = seriesColor(index, series.length);
    const coords = line.points
      .map((point) => {
        const x = xScale.pixel(Math.log10(point.n));
        const y = yScale.pixel(loglog ? Math.log10(point.meanH) : point.meanH);
        return `${px(x)},${px(y)}`;
      })
      .join(" ");
    parts.push(
      `<polyline fill="none" stroke="${color}" stroke-width="1.8" points="${coords}"/>`
    );
    for (const point of line.points) {
      const x = px(xScale.pixel(Math.log10(point.n)));
      const y = px(yScale.pixel(loglog ? Math.log10(point.meanH) : point.meanH));
      parts.push(`<circle cx="${x}" cy="${y}" r="2.6" fill="${color}"/>`);
    }
  });

  // legend, one entry per group, group value truncated to 3 significant digits
  series.forEach((line, index) => {
    const y = MARGIN.top + 14 + 18 * index;
    const x = MARGIN.left + 12;
    parts.push(
      `<line x1="${x}" y1="${y}" x2="${x + 22}" y2="${y}" ` +
        `stroke="${seriesColor(index, series.length)}" stroke-width="3"/>`,
      `<text x="${x + 28}" y="${y + 4}" font-size="12">${escapeXml(spec.groupBy)} = ` +
        `${truncateSig(line.key)}</text>`
    );
  });

  if (spec.title) {
    parts.push(
      `<text x="${WIDTH / 2}" y="26" text-anchor="middle" font-size="16">` +
        `${escapeXml(spec.title)}</text>`
    );
  }
  const xLabel = spec.xLabel ?? "n (log scale)";
  const yLabel = spec.yLabel ?? (loglog ? "mean h (log scale)" : "mean h");
  parts.push(
    `<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 14}" ` +
      `text-anchor="middle" font-size="13">${escapeXml(xLabel)}</text>`,
    `<text x="20" y="${(MARGIN.top + bottom) / 2}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 20 ${(MARGIN.top + bottom) / 2})">${escapeXml(yLabel)}</text>`
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
