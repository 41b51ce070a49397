/** Pairwise judgment grid logic: reciprocal autofill on the 1/9..9 scale. */

import { parseCell } from './validation.js';

export const SCALE_MIN = 1 / 9;
export const SCALE_MAX = 9;

/** The indifferent starting grid: every judgment 1. */
export function identityGrid(n: number): number[][] {
  return Array.from({ length: n }, () => Array.from({ length: n }, () => 1));
}

export function parseJudgment(text: string): number {
  const v = parseCell(text);
  if (!Number.isFinite(v) || v < SCALE_MIN || v > SCALE_MAX) return NaN;
  return v;
}

/**
 * Apply one judgment; the mirror cell auto-fills with the reciprocal.
 * Returns a new grid (the input is not mutated). Diagonal cells are fixed.
 */
export function setJudgment(grid: number[][], i: number, j: number, value: number): number[][] {
  if (i === j) return grid.map((row) => [...row]);
  const next = grid.map((row) => [...row]);
  next[i][j] = value;
  next[j][i] = 1 / value;
  return next;
}
