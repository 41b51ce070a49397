import type {
  AhpResponse,
  ApiError,
  EvaluateRequest,
  ResultJson,
  SensitivityDoc,
  SensitivityRequest,
} from './types.js';

export class ServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

/** Thrown internally when a newer request supersedes an in-flight one. */
export class Superseded extends Error {}

type Endpoint = 'evaluate' | 'ahp' | 'sensitivity';

/**
 * Client for the ranking service. At most one request is in flight per
 * endpoint: issuing a new one aborts its predecessor, so stale responses
 * can never overwrite fresher state.
 */
export class ApiClient {
  private inflight = new Map<Endpoint, AbortController>();

  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = globalThis.fetch?.bind(globalThis),
  ) {}

  async evaluate(body: EvaluateRequest): Promise<ResultJson> {
    return this.post('evaluate', '/api/evaluate', body);
  }

  async ahpWeights(matrices: number[][][]): Promise<AhpResponse> {
    return this.post('ahp', '/api/ahp/weights', { matrices });
  }

  async sensitivity(body: SensitivityRequest): Promise<SensitivityDoc> {
    return this.post('sensitivity', '/api/sensitivity', body);
  }

  async health(): Promise<{ status: string; version: string }> {
    const resp = await this.fetchFn(`${this.baseUrl}/api/health`);
    return resp.json();
  }

  private async post<T>(endpoint: Endpoint, path: string, body: unknown): Promise<T> {
    this.inflight.get(endpoint)?.abort();
    const controller = new AbortController();
    this.inflight.set(endpoint, controller);
    let resp: Response;
    try {
      resp = await this.fetchFn(`${this.baseUrl}${path}`, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (err) {
      if (controller.signal.aborted) throw new Superseded(path);
      throw err;
    } finally {
      if (this.inflight.get(endpoint) === controller) this.inflight.delete(endpoint);
    }
    if (!resp.ok) {
      const doc = (await resp.json().catch(() => null)) as ApiError | null;
      throw new ServiceError(doc?.error ?? 'HttpError', doc?.message ?? resp.statusText, resp.status);
    }
    return resp.json() as Promise<T>;
  }
}
