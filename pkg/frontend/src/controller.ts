/** Orchestrates the annotation flow: load, live lint, save, conflicts. */

import type { ApiClient } from './api.js';
import { LintRejectedError, NoRecordsLeft, StaleVersionError } from './api.js';
import { debounce } from './debounce.js';
import { WorkbenchSession } from './session.js';
import type { GuidelineRule, RecordPayload } from './types.js';

export interface ControllerEvents {
  onSession?(session: WorkbenchSession | null): void;
  onLint?(session: WorkbenchSession): void;
  onComplete?(): void;
  onConflict?(serverCopy: RecordPayload): void;
  onError?(err: unknown): void;
}

export class WorkbenchController {
  session: WorkbenchSession | null = null;
  rules: GuidelineRule[] = [];
  complete = false;
  private readonly scheduleLint: { (): void; cancel(): void; flush(): void };

  constructor(
    private readonly client: ApiClient,
    private readonly events: ControllerEvents = {},
    debounceMs = 300,
  ) {
    this.scheduleLint = debounce(() => {
      void this.lintNow();
    }, debounceMs);
  }

  async start(): Promise<void> {
    this.rules = await this.client.rules();
    await this.loadNext();
  }

  async loadNext(): Promise<void> {
    this.scheduleLint.cancel();
    try {
      const record = await this.client.nextUnannotated();
      this.session = new WorkbenchSession(record);
      this.complete = false;
      this.events.onSession?.(this.session);
      await this.lintNow();
    } catch (err) {
      if (err instanceof NoRecordsLeft) {
        this.session = null;
        this.complete = true;
        this.events.onSession?.(null);
        this.events.onComplete?.();
        return;
      }
      this.events.onError?.(err);
      throw err;
    }
  }

  async open(recordId: string): Promise<void> {
    this.scheduleLint.cancel();
    const record = await this.client.getRecord(recordId);
    this.session = new WorkbenchSession(record);
    this.complete = false;
    this.events.onSession?.(this.session);
    await this.lintNow();
  }

  /** Edit one slot; lint is re-run after the debounce window. */
  edit(index: number, text: string): void {
    if (!this.session) return;
    this.session.setDraft(index, text);
    this.scheduleLint();
  }

  async lintNow(): Promise<void> {
    const session = this.session;
    if (!session) return;
    try {
      const report = await this.client.lint(session.filledDrafts, session.recordId);
      if (this.session === session) {
        session.applyLint(report);
        this.events.onLint?.(session);
      }
    } catch (err) {
      // keep editing on transport errors; results are just stale
      this.events.onError?.(err);
    }
  }

  async save(): Promise<boolean> {
    const session = this.session;
    if (!session) return false;
    this.scheduleLint.flush();
    if (!session.canSave) await this.lintNow();
    if (!session.canSave) return false;
    session.state = 'saving';
    try {
      const version = await this.client.save(session.recordId, session.filledDrafts, session.version);
      session.markSaved(version);
      return true;
    } catch (err) {
      if (err instanceof StaleVersionError) {
        session.markStale();
        const serverCopy = await this.client.getRecord(session.recordId);
        this.events.onConflict?.(serverCopy);
        return false;
      }
      if (err instanceof LintRejectedError) {
        session.state = 'editing';
        session.applyLint(err.report);
        this.events.onLint?.(session);
        return false;
      }
      session.state = 'editing';
      this.events.onError?.(err);
      return false;
    }
  }
}
