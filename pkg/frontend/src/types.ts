/** Payload types mirroring the annotation service's JSON API. */

export interface RecordMeta {
  weather: string | null;
  lighting: string | null;
  scene_tags: string[];
}

export interface RecordPayload {
  id: string;
  image: string;
  descriptions: string[];
  meta: RecordMeta;
  category: 'seen' | 'unseen' | 'out_of_domain';
  version: number;
}

export interface RecordSummary {
  id: string;
  category: string;
  version: number;
  annotated: boolean;
}

export interface Diagnostic {
  rule: string;
  severity: 'error' | 'warning';
  message: string;
  sentence: number | null;
  span: [number, number] | null;
}

export interface LintReport {
  record: string;
  pass: boolean;
  diagnostics: Diagnostic[];
}

export interface GuidelineRule {
  id: string;
  checkability: 'automatic' | 'advisory' | 'manual';
  severity: 'error' | 'warning';
  scope: 'sentence' | 'set';
  summary: string;
}

export const SLOT_COUNT = 10;
