/** Deterministic SVG primitives: fixed canvas, no timestamps, coordinates
 * rounded to 1/100 px so output bytes depend only on the data. */

export const WIDTH = 800;
export const HEIGHT = 500;
export const MARGIN = { top: 48, right: 28, bottom: 56, left: 72 };

export interface Scale {
  min: number;
  max: number;
  pixel: (value: number) => number;
}

export function makeScale(min: number, max: number, outLo: number, outHi: number): Scale {
  if (min === max) {
    min -= 0.5;
    max += 0.5;
  }
  const pad = 0.04 * (max - min);
  const lo = min - pad;
  const hi = max + pad;
  return {
    min: lo,
    max: hi,
    pixel: (value) => outLo + ((value - lo) / (hi - lo)) * (outHi - outLo),
  };
}

/** Decade ticks (with 2x and 5x minors) for an axis holding log10 values. */
export function logTicks(scale: Scale): { value: number; label: string; minor: boolean }[] {
  const ticks = [];
  for (let k = Math.ceil(scale.min - 1e-9); k <= scale.max + 1e-9; k++) {
    ticks.push({ value: k, label: `1e${k}`, minor: false });
    for (const mult of [2, 5]) {
      const v = k + Math.log10(mult);
      if (v <= scale.max) {
        ticks.push({ value: v, label: "", minor: true });
      }
    }
  }
  return ticks.filter((t) => t.value >= scale.min && t.value <= scale.max);
}

/** Round-number ticks (1/2/5 x 10^k steps) for a linear axis. */
export function linearTicks(scale: Scale, target = 6): { value: number; label: string }[] {
  const span = scale.max - scale.min;
  const rawStep = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(rawStep)));
  let step = 10 * mag;
  for (const mult of [1, 2, 5]) {
    if (mult * mag >= rawStep) {
      step = mult * mag;
      break;
    }
  }
  const ticks = [];
  for (let v = Math.ceil(scale.min / step) * step; v <= scale.max + 1e-9; v += step) {
    ticks.push({ value: v, label: fmt(v) });
  }
  return ticks;
}

export function fmt(value: number): string {
  if (Number.isInteger(value) && Math.abs(value) < 1e7) return String(value);
  return value.toPrecision(4).replace(/\.?0+$/, "").replace(/\.?0+e/, "e");
}

export function px(value: number): string {
  return value.toFixed(2);
}

/** Truncate (not round) to `digits` significant digits, plain decimal form. */
export function truncateSig(value: number, digits = 3): string {
  if (!Number.isFinite(value) || value === 0) return "0";
  const sign = value < 0 ? "-" : "";
  const [mantissa, expPart] = Math.abs(value).toExponential(12).split("e");
  const ds = mantissa.replace(".", "").slice(0, digits);
  const exp = parseInt(expPart, 10);
  let out: string;
  if (exp >= digits - 1) {
    out = ds + "0".repeat(exp - digits + 1);
  } else if (exp >= 0) {
    out = ds.slice(0, exp + 1) + "." + ds.slice(exp + 1);
  } else {
    out = "0." + "0".repeat(-exp - 1) + ds;
  }
  if (out.includes(".")) {
    out = out.replace(/0+$/, "").replace(/\.$/, "");
  }
  return sign + out;
}

/** Line hue fixed, lightness darkening with the series index. */
export function seriesColor(index: number, count: number): string {
  const light = count <= 1 ? 45 : 72 - (index * (72 - 28)) / (count - 1);
  return `hsl(213, 62%, ${light.toFixed(1)}%)`;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}
