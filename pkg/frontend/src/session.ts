/** Editing state for one record: ten draft slots, lint results, save gating.
 *
 * The session never decides guideline compliance itself; it holds the last
 * server lint report and derives gating from it. Saving stays disabled while
 * error-severity diagnostics are present, while the report is out of date
 * with the drafts, or after the server reported our version stale.
 */

import type { Diagnostic, LintReport, RecordPayload } from './types.js';
import { SLOT_COUNT } from './types.js';

export type SessionState = 'editing' | 'saving' | 'saved' | 'stale';

export class WorkbenchSession {
  readonly recordId: string;
  readonly image: string;
  version: number;
  drafts: string[];
  dirty = false;
  state: SessionState = 'editing';
  lastReport: LintReport | null = null;
  /** serialized drafts the last report was computed for */
  private lintedAgainst: string | null = null;

  constructor(record: RecordPayload) {
    this.recordId = record.id;
    this.image = record.image;
    this.version = record.version;
    this.drafts = Array.from({ length: SLOT_COUNT }, (_, i) => record.descriptions[i] ?? '');
  }

  setDraft(index: number, text: string): void {
    if (index < 0 || index >= SLOT_COUNT) throw new RangeError(`slot ${index} out of range`);
    if (this.drafts[index] === text) return;
    this.drafts[index] = text;
    this.dirty = true;
    if (this.state === 'saved') this.state = 'editing';
  }

  /** Drafts as sent to the linter: empty slots are real (count) violations. */
  get filledDrafts(): string[] {
    return this.drafts.filter((text) => text.trim().length > 0);
  }

  applyLint(report: LintReport): void {
    this.lastReport = report;
    this.lintedAgainst = JSON.stringify(this.filledDrafts);
  }

  get lintCurrent(): boolean {
    return this.lintedAgainst === JSON.stringify(this.filledDrafts);
  }

  get errors(): Diagnostic[] {
    return (this.lastReport?.diagnostics ?? []).filter((d) => d.severity === 'error');
  }

  get canSave(): boolean {
    return (
      this.state !== 'stale' &&
      this.state !== 'saving' &&
      this.lastReport !== null &&
      this.lintCurrent &&
      this.errors.length === 0
    );
  }

  markStale(): void {
    this.state = 'stale';
  }

  markSaved(newVersion: number): void {
    this.version = newVersion;
    this.dirty = false;
    this.state = 'saved';
  }

  diagnosticsForSlot(index: number): Diagnostic[] {
    return (this.lastReport?.diagnostics ?? []).filter((d) => d.sentence === index);
  }

  get setLevelDiagnostics(): Diagnostic[] {
    return (this.lastReport?.diagnostics ?? []).filter((d) => d.sentence === null);
  }
}
