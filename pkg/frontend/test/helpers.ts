/** Shared fakes: an in-memory ApiClient with server-like semantics. */

import type { ApiClient } from '../src/api.js';
import { LintRejectedError, NoRecordsLeft, StaleVersionError } from '../src/api.js';
import type { Diagnostic, GuidelineRule, LintReport, RecordMeta, RecordPayload, RecordSummary } from '../src/types.js';

export const CATALOG: GuidelineRule[] = [
  { id: 'G007', checkability: 'automatic', severity: 'error', scope: 'set', summary: 'ten sentences' },
  { id: 'G008', checkability: 'automatic', severity: 'error', scope: 'set', summary: 'weather and lighting' },
  { id: 'G014', checkability: 'automatic', severity: 'error', scope: 'sentence', summary: 'no contractions' },
  { id: 'G021', checkability: 'manual', severity: 'error', scope: 'set', summary: 'human-written' },
  { id: 'G033', checkability: 'advisory', severity: 'warning', scope: 'set', summary: 'vehicle terms' },
];

export const VALID_SET = [
  'It is clear daytime.',
  'It is a two-way street.',
  'A white car is driving in the ego lane nearby.',
  'A crosswalk is ahead.',
  '2 cars are parked on the left side of the road.',
  'A pedestrian is on the right sidewalk.',
  'The traffic light is green at the intersection.',
  'An intersection is ahead.',
  'No pedestrians are on the crosswalk.',
  'It is clear daytime, and many cars are on the street.',
];

/** Minimal server-side lint model: count rule, weather rule, contractions. */
export function fakeLint(descriptions: string[], recordId = ''): LintReport {
  const diagnostics: Diagnostic[] = [];
  if (descriptions.length !== 10) {
    diagnostics.push({
      rule: 'G007', severity: 'error', sentence: null, span: null,
      message: `expected 10 descriptions, found ${descriptions.length}`,
    });
  }
  if (!descriptions.some((t) => /daytime|nighttime/i.test(t) && /clear|rain|snow|fog/i.test(t))) {
    diagnostics.push({
      rule: 'G008', severity: 'error', sentence: null, span: null,
      message: 'no weather/lighting sentence',
    });
  }
  descriptions.forEach((text, index) => {
    const match = /\w+'(s|t|re|ll|ve|m)\b/.exec(text);
    if (match) {
      diagnostics.push({
        rule: 'G014', severity: 'error', sentence: index,
        span: [match.index, match.index + match[0].length], message: `contraction ${match[0]}`,
      });
    }
  });
  return { record: recordId, pass: diagnostics.every((d) => d.severity !== 'error'), diagnostics };
}

export class FakeClient implements ApiClient {
  records = new Map<string, RecordPayload>();
  lintCalls = 0;
  saveCalls = 0;

  constructor(records: RecordPayload[]) {
    for (const record of records) this.records.set(record.id, structuredClone(record));
  }

  async nextUnannotated(): Promise<RecordPayload> {
    for (const record of this.records.values()) {
      if (record.category === 'unseen') return structuredClone(record);
    }
    throw new NoRecordsLeft();
  }

  async getRecord(id: string): Promise<RecordPayload> {
    const record = this.records.get(id);
    if (!record) throw new Error(`404: ${id}`);
    return structuredClone(record);
  }

  async listRecords(): Promise<RecordSummary[]> {
    return [...this.records.values()].map((r) => ({
      id: r.id, category: r.category, version: r.version, annotated: r.descriptions.length > 0,
    }));
  }

  async lint(descriptions: string[], recordId = ''): Promise<LintReport> {
    this.lintCalls += 1;
    return fakeLint(descriptions, recordId);
  }

  async save(id: string, descriptions: string[], version: number, _meta?: RecordMeta): Promise<number> {
    this.saveCalls += 1;
    const record = this.records.get(id);
    if (!record) throw new Error(`404: ${id}`);
    if (record.version !== version) throw new StaleVersionError(record.version);
    const report = fakeLint(descriptions, id);
    if (!report.pass) throw new LintRejectedError(report);
    record.descriptions = [...descriptions];
    record.category = 'seen';
    record.version += 1;
    return record.version;
  }

  async rules(): Promise<GuidelineRule[]> {
    return CATALOG;
  }
}

export function unseenRecord(id: string, version = 1): RecordPayload {
  return {
    id,
    image: `images/${id}.jpg`,
    descriptions: [],
    meta: { weather: null, lighting: null, scene_tags: [] },
    category: 'unseen',
    version,
  };
}
