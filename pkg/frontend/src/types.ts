/** Wire types exchanged with the ranking service. */

export type Mode = 'paper-2011' | 'standard';
export type DirectionToken = 'max' | 'min';

export interface CriterionDoc {
  name: string;
  direction: DirectionToken;
  unit?: string;
}

export interface MatrixDoc {
  criteria: CriterionDoc[];
  alternatives: string[];
  values: number[][];
}

export interface ResultAlternative {
  name: string;
  S: number;
  K: number;
  rank: number;
  row: number;
}

export interface ResultJson {
  mode: Mode;
  optimal: { S: number; K: number };
  alternatives: ResultAlternative[];
  weighted_matrix: number[][];
}

export interface ConsistencyDoc {
  lambda_max: number;
  consistency_index: number;
  random_index: number;
  consistency_ratio: number;
  acceptable: boolean;
}

export interface AhpResponse {
  weights: number[];
  consistency: ConsistencyDoc;
}

export interface SensitivityDoc {
  criterion: string;
  baseline_weight: number;
  grid: number[];
  k_trajectories: Record<string, number[]>;
  rank_change_points: number[];
  stability_interval: [number, number];
}

export interface ApiError {
  error: string;
  message: string;
}

export interface EvaluateRequest {
  matrix: MatrixDoc;
  weights: number[];
  mode: Mode;
}

export interface SensitivityRequest extends EvaluateRequest {
  criterion: string;
  grid: number[];
}
