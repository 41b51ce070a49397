/** Test doubles: a fetch backed by captured service exchanges, and a view
 * recorder. The fixtures are verbatim responses from the real service, so
 * these tests exercise the console against genuine wire payloads. */

import { readFileSync } from 'node:fs';
import { resolve } from 'node:path';

import type { AhpResponse, ResultJson, SensitivityDoc } from '../src/types.js';
import type { CellError } from '../src/validation.js';
import type { ViewHooks } from '../src/controller.js';

interface Exchange {
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export function loadFixtures(): Exchange[] {
  // resolved from the package root so it works in node and DOM environments
  const path = resolve(process.cwd(), 'tests/fixtures/service_fixtures.json');
  return JSON.parse(readFileSync(path, 'utf-8')) as Exchange[];
}

function deepApproxEqual(a: unknown, b: unknown, tol = 1e-9): boolean {
  if (typeof a === 'number' && typeof b === 'number') {
    return Math.abs(a - b) <= tol * Math.max(1, Math.abs(a), Math.abs(b));
  }
  if (Array.isArray(a) && Array.isArray(b)) {
    return a.length === b.length && a.every((v, i) => deepApproxEqual(v, b[i], tol));
  }
  if (a && b && typeof a === 'object' && typeof b === 'object') {
    const ka = Object.keys(a as object).sort();
    const kb = Object.keys(b as object).sort();
    if (ka.join(',') !== kb.join(',')) return false;
    return ka.every((k) =>
      deepApproxEqual((a as Record<string, unknown>)[k], (b as Record<string, unknown>)[k], tol),
    );
  }
  return a === b;
}

export interface FetchLogEntry {
  path: string;
  body: unknown;
}

/** fetch(...) that replays captured exchanges and logs every request. */
export function fixtureFetch(log: FetchLogEntry[] = []): typeof fetch {
  const exchanges = loadFixtures();
  return (async (input: RequestInfo | URL, init?: RequestInit) => {
    const url = String(input);
    const path = url.replace(/^https?:\/\/[^/]+/, '');
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    log.push({ path, body });
    if (path === '/api/health') {
      return jsonResponse(200, { status: 'ok', version: 'test' });
    }
    const hit = exchanges.find((e) => e.path === path && deepApproxEqual(e.body, body));
    if (!hit) {
      return jsonResponse(404, { error: 'NoFixture', message: `${path} with unmatched body` });
    }
    return jsonResponse(hit.status, hit.response);
  }) as typeof fetch;
}

export function jsonResponse(status: number, doc: unknown): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    statusText: String(status),
    json: async () => structuredClone(doc),
  } as unknown as Response;
}

/** ViewHooks implementation that records everything it is told to render. */
export class ViewRecorder implements ViewHooks {
  rankings: ResultJson[] = [];
  sensitivities: SensitivityDoc[] = [];
  consistencies: { resp: AhpResponse | null; badge: 'green' | 'red' | 'none' }[] = [];
  weights: number[][] = [];
  pairwiseGrids: number[][][] = [];
  matrixRenders = 0;
  rankFlashes = 0;
  cellErrors: CellError[][] = [];
  errors: { code: string; message: string }[] = [];
  applyEnabled: boolean[] = [];

  renderMatrix(): void {
    this.matrixRenders += 1;
  }
  renderWeights(weights: number[]): void {
    this.weights.push([...weights]);
  }
  renderRanking(result: ResultJson): void {
    this.rankings.push(result);
  }
  renderSensitivity(report: SensitivityDoc): void {
    this.sensitivities.push(report);
  }
  renderConsistency(resp: AhpResponse | null, badge: 'green' | 'red' | 'none'): void {
    this.consistencies.push({ resp, badge });
  }
  renderPairwise(grid: number[][]): void {
    this.pairwiseGrids.push(grid.map((row) => [...row]));
  }
  setApplyWeightsEnabled(enabled: boolean): void {
    this.applyEnabled.push(enabled);
  }
  flashRankChange(): void {
    this.rankFlashes += 1;
  }
  showCellErrors(errors: CellError[]): void {
    this.cellErrors.push(errors);
  }
  showError(code: string, message: string): void {
    this.errors.push({ code, message });
  }
  clearErrors(): void {}

  lastRankingNames(): string[] {
    const last = this.rankings.at(-1);
    return last ? last.alternatives.map((a) => a.name) : [];
  }
}
