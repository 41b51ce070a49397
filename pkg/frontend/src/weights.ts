/** Weight-slider arithmetic.
 *
 * Moving one slider rescales the others proportionally, the same rule the
 * service's sensitivity sweep applies, so a slider released back at its
 * anchor value restores the anchor vector exactly.
 */

export function sweptWeights(anchor: number[], index: number, value: number): number[] {
  const base = anchor[index];
  if (value === base) return [...anchor];
  const scale = (1 - value) / (1 - base);
  const raw = anchor.map((w, j) => (j === index ? value : w * scale));
  const total = raw.reduce((a, b) => a + b, 0);
  return raw.map((w) => w / total);
}

export function weightSum(weights: number[]): number {
  return weights.reduce((a, b) => a + b, 0);
}

/** Display invariant: sliders always show a vector summing to 1 +- 0.005. */
export function sumWithinDisplayTolerance(weights: number[]): boolean {
  return Math.abs(weightSum(weights) - 1) <= 0.005;
}
