/** The bundled demo dataset: five projects scored on NPV, ROR, PB, PR. */

import type { MatrixDraft } from './validation.js';
import type { Mode } from './types.js';

export const PRESET_MODE: Mode = 'paper-2011';

export const PRESET_WEIGHTS = [0.29, 0.34, 0.22, 0.15];

export function caseStudyDraft(): MatrixDraft {
  return {
    criteria: [
      { name: 'NPV', direction: 'max' },
      { name: 'ROR', direction: 'max' },
      { name: 'PB', direction: 'min' },
      { name: 'PR', direction: 'min' },
    ],
    alternatives: ['Project 1', 'Project 2', 'Project 3', 'Project 4', 'Project 5'],
    cells: [
      ['10', '3', '6', '7'],
      ['13', '5', '7', '9'],
      ['9', '1', '8', '1'],
      ['11', '3', '8', '7'],
      ['12', '5', '10', '5'],
    ],
  };
}
