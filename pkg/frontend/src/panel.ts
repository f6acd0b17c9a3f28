/** Guideline panel: one entry per catalog rule with its live state. */

import type { Diagnostic, GuidelineRule, LintReport } from './types.js';

export type RuleState = 'pass' | 'fail' | 'manual' | 'unknown';

export interface PanelEntry {
  rule: GuidelineRule;
  state: RuleState;
  hits: Diagnostic[];
}

export function buildPanel(rules: GuidelineRule[], report: LintReport | null): PanelEntry[] {
  return rules.map((rule) => {
    if (rule.checkability === 'manual') {
      return { rule, state: 'manual', hits: [] };
    }
    if (report === null) {
      return { rule, state: 'unknown', hits: [] };
    }
    const hits = report.diagnostics.filter((d) => d.rule === rule.id);
    return { rule, state: hits.length === 0 ? 'pass' : 'fail', hits };
  });
}

export function allGreen(entries: PanelEntry[]): boolean {
  return entries.every((entry) => entry.state === 'pass' || entry.state === 'manual');
}
