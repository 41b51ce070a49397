/** Client-side mirror of the service's matrix validation.
 *
 * Same error codes, same thresholds: a draft that fails here would be
 * rejected by the service with the identical code, so no request is sent.
 */

import type { DirectionToken, MatrixDoc } from './types.js';

export const COST_FLOOR = 1e-12;
export const WEIGHT_SUM_TOL = 1e-6;

export interface CellError {
  row: number; // 0-based alternative index; -1 for whole-column/name errors
  col: number; // 0-based criterion index; -1 for row-name errors
  code: string;
  message: string;
}

export interface MatrixDraft {
  criteria: { name: string; direction: DirectionToken }[];
  alternatives: string[];
  cells: string[][]; // raw editable text
}

/** Parse a cell; accepts plain numbers and p/q fractions. */
export function parseCell(text: string): number {
  const t = text.trim();
  if (t.includes('/')) {
    const parts = t.split('/');
    if (parts.length !== 2) return NaN;
    const num = Number(parts[0]);
    const den = Number(parts[1]);
    if (!Number.isFinite(num) || !Number.isFinite(den) || den === 0) return NaN;
    return num / den;
  }
  if (t === '') return NaN;
  return Number(t);
}

export function validateDraft(draft: MatrixDraft): CellError[] {
  const errors: CellError[] = [];
  const m = draft.alternatives.length;
  const n = draft.criteria.length;

  const seenCrit = new Set<string>();
  draft.criteria.forEach((c, j) => {
    if (!c.name.trim()) {
      errors.push({ row: -1, col: j, code: 'InvalidName', message: 'criterion name is empty' });
    } else if (seenCrit.has(c.name)) {
      errors.push({ row: -1, col: j, code: 'InvalidName', message: `duplicate criterion ${c.name}` });
    }
    seenCrit.add(c.name);
  });
  const seenAlt = new Set<string>();
  draft.alternatives.forEach((a, i) => {
    if (!a.trim()) {
      errors.push({ row: i, col: -1, code: 'InvalidName', message: 'alternative name is empty' });
    } else if (seenAlt.has(a)) {
      errors.push({ row: i, col: -1, code: 'InvalidName', message: `duplicate alternative ${a}` });
    }
    seenAlt.add(a);
  });

  const parsed: number[][] = draft.cells.map((row) => row.map(parseCell));
  for (let i = 0; i < m; i++) {
    for (let j = 0; j < n; j++) {
      const v = parsed[i][j];
      if (!Number.isFinite(v)) {
        errors.push({
          row: i, col: j, code: 'NonFiniteValue',
          message: `not a number: ${draft.cells[i][j] || '(empty)'}`,
        });
        continue;
      }
      if (draft.criteria[j].direction === 'min' && v < COST_FLOOR) {
        errors.push({
          row: i, col: j, code: 'NonPositiveCostValue',
          message: 'cost values must be positive (reciprocal must exist)',
        });
      }
      if (draft.criteria[j].direction === 'max' && v < 0) {
        errors.push({
          row: i, col: j, code: 'NegativeBenefitValue',
          message: 'benefit values must be >= 0',
        });
      }
    }
  }
  for (let j = 0; j < n; j++) {
    if (draft.criteria[j].direction !== 'max') continue;
    const col = parsed.map((row) => row[j]);
    if (col.every((v) => Number.isFinite(v)) && col.reduce((a, b) => a + b, 0) <= 0) {
      errors.push({
        row: -1, col: j, code: 'DegenerateColumn',
        message: 'a benefit column of all zeros cannot be normalized',
      });
    }
  }
  return errors;
}

export function validateWeights(weights: number[]): string | null {
  if (weights.some((w) => !Number.isFinite(w))) return 'NonFiniteValue';
  if (weights.some((w) => w <= 0)) return 'WeightSumViolation';
  const total = weights.reduce((a, b) => a + b, 0);
  if (Math.abs(total - 1) > WEIGHT_SUM_TOL) return 'WeightSumViolation';
  return null;
}

export function draftToMatrixDoc(draft: MatrixDraft): MatrixDoc {
  return {
    criteria: draft.criteria.map((c) => ({ name: c.name, direction: c.direction })),
    alternatives: [...draft.alternatives],
    values: draft.cells.map((row) => row.map(parseCell)),
  };
}
