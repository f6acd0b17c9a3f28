import { describe, expect, it } from 'vitest';

import { allGreen, buildPanel } from '../src/panel.js';
import { CATALOG, fakeLint, VALID_SET } from './helpers.js';

describe('guideline panel', () => {
  it('has one entry per catalog rule', () => {
    const entries = buildPanel(CATALOG, null);
    expect(entries).toHaveLength(CATALOG.length);
    expect(entries.map((e) => e.rule.id)).toEqual(CATALOG.map((r) => r.id));
  });

  it('manual rules are never pass/fail', () => {
    const entries = buildPanel(CATALOG, fakeLint(VALID_SET));
    expect(entries.find((e) => e.rule.id === 'G021')!.state).toBe('manual');
  });

  it('checkable rules are unknown before the first report', () => {
    const entries = buildPanel(CATALOG, null);
    expect(entries.find((e) => e.rule.id === 'G014')!.state).toBe('unknown');
  });

  it('a compliant set turns every checkable rule green', () => {
    const entries = buildPanel(CATALOG, fakeLint(VALID_SET));
    expect(allGreen(entries)).toBe(true);
  });

  it('diagnostics flip their rule to fail with the hits attached', () => {
    const drafts = [...VALID_SET];
    drafts[0] = "it's clear daytime.";
    const entries = buildPanel(CATALOG, fakeLint(drafts));
    const g014 = entries.find((e) => e.rule.id === 'G014')!;
    expect(g014.state).toBe('fail');
    expect(g014.hits.length).toBe(1);
    expect(allGreen(entries)).toBe(false);
  });
});
