/** Typed client for the annotation service. All validation happens server-side. */

import type { GuidelineRule, LintReport, RecordMeta, RecordPayload, RecordSummary } from './types.js';

export class StaleVersionError extends Error {
  constructor(public currentVersion: number | null) {
    super('record version is stale');
    this.name = 'StaleVersionError';
  }
}

export class LintRejectedError extends Error {
  constructor(public report: LintReport) {
    super('description set fails error-severity guideline rules');
    this.name = 'LintRejectedError';
  }
}

export class NoRecordsLeft extends Error {
  constructor() {
    super('no unannotated records remain');
    this.name = 'NoRecordsLeft';
  }
}

export interface ApiClient {
  nextUnannotated(): Promise<RecordPayload>;
  getRecord(id: string): Promise<RecordPayload>;
  listRecords(): Promise<RecordSummary[]>;
  lint(descriptions: string[], recordId?: string, meta?: RecordMeta): Promise<LintReport>;
  save(id: string, descriptions: string[], version: number, meta?: RecordMeta): Promise<number>;
  rules(): Promise<GuidelineRule[]>;
}

async function fail(response: Response): Promise<never> {
  let detail = '';
  try {
    detail = JSON.stringify(await response.json());
  } catch {
    detail = response.statusText;
  }
  throw new Error(`API error ${response.status}: ${detail}`);
}

export class HttpApiClient implements ApiClient {
  constructor(private readonly base: string = '') {}

  private url(path: string): string {
    return `${this.base}${path}`;
  }

  async nextUnannotated(): Promise<RecordPayload> {
    const response = await fetch(this.url('/api/records/next-unannotated'));
    if (response.status === 404) throw new NoRecordsLeft();
    if (!response.ok) await fail(response);
    return response.json();
  }

  async getRecord(id: string): Promise<RecordPayload> {
    const response = await fetch(this.url(`/api/records/${encodeURIComponent(id)}`));
    if (!response.ok) await fail(response);
    return response.json();
  }

  async listRecords(): Promise<RecordSummary[]> {
    const response = await fetch(this.url('/api/records'));
    if (!response.ok) await fail(response);
    const body = await response.json();
    return body.records;
  }

  async lint(descriptions: string[], recordId = '', meta?: RecordMeta): Promise<LintReport> {
    const response = await fetch(this.url('/api/lint'), {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ descriptions, record_id: recordId, meta: meta ?? null }),
    });
    if (!response.ok) await fail(response);
    return response.json();
  }

  async save(id: string, descriptions: string[], version: number, meta?: RecordMeta): Promise<number> {
    const response = await fetch(this.url(`/api/records/${encodeURIComponent(id)}`), {
      method: 'PUT',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ descriptions, version, meta: meta ?? null }),
    });
    if (response.status === 409) {
      const body = await response.json().catch(() => null);
      const current = body?.detail?.current_version ?? null;
      throw new StaleVersionError(current);
    }
    if (response.status === 422) {
      const body = await response.json().catch(() => null);
      if (body?.lint) throw new LintRejectedError(body.lint as LintReport);
      await fail(response);
    }
    if (!response.ok) await fail(response);
    const body = await response.json();
    return body.version;
  }

  async rules(): Promise<GuidelineRule[]> {
    const response = await fetch(this.url('/api/rules'));
    if (!response.ok) await fail(response);
    return response.json();
  }
}
