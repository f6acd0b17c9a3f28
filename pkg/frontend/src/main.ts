/** DOM wiring for the workbench. Keyboard-first: Enter advances to the next
 * slot, Ctrl+S saves, Ctrl+Enter saves and loads the next image. */

import { HttpApiClient } from './api.js';
import { WorkbenchController } from './controller.js';
import { allGreen, buildPanel } from './panel.js';
import type { WorkbenchSession } from './session.js';
import type { RecordPayload } from './types.js';
import { SLOT_COUNT } from './types.js';

const client = new HttpApiClient('');
const root = document.getElementById('app') as HTMLElement;

let controller: WorkbenchController;

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className = '',
  text = '',
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text) node.textContent = text;
  return node;
}

function renderCompletion(): void {
  root.replaceChildren(
    el('div', 'completion', 'All records annotated. Nothing left in the queue.'),
  );
}

function renderConflict(serverCopy: RecordPayload): void {
  const banner = el('div', 'banner conflict');
  banner.append(
    el('strong', '', 'Save rejected: the record changed on the server. '),
    el('span', '', `Server version ${serverCopy.version}. Reload to continue from the server copy.`),
  );
  const reload = el('button', '', 'Load server copy');
  reload.addEventListener('click', () => void controller.open(serverCopy.id));
  banner.append(reload);
  root.prepend(banner);
}

function renderSession(session: WorkbenchSession | null): void {
  if (!session) {
    renderCompletion();
    return;
  }
  root.replaceChildren();

  const header = el('header');
  header.append(
    el('h1', '', session.recordId),
    el('span', 'version', `v${session.version}`),
  );
  root.append(header);

  const image = el('img', 'scene') as HTMLImageElement;
  image.src = session.image;
  image.alt = session.recordId;
  image.addEventListener('error', () => image.classList.add('missing'));
  root.append(image);

  const slots = el('div', 'slots');
  for (let i = 0; i < SLOT_COUNT; i++) {
    const row = el('div', 'slot');
    row.dataset.slot = String(i);
    const label = el('label', '', `${i + 1}.`);
    const input = el('textarea') as HTMLTextAreaElement;
    input.rows = 2;
    input.value = session.drafts[i] ?? '';
    input.addEventListener('input', () => controller.edit(i, input.value));
    input.addEventListener('keydown', (event) => {
      if (event.key === 'Enter' && !event.shiftKey && !event.ctrlKey) {
        event.preventDefault();
        const next = slots.querySelector<HTMLTextAreaElement>(`[data-slot="${i + 1}"] textarea`);
        next?.focus();
      }
    });
    const marks = el('div', 'marks');
    marks.dataset.marksFor = String(i);
    row.append(label, input, marks);
    slots.append(row);
  }
  root.append(slots);

  const setMarks = el('div', 'set-marks');
  root.append(setMarks);

  const controls = el('div', 'controls');
  const save = el('button', 'save', 'Save record') as HTMLButtonElement;
  save.disabled = !session.canSave;
  save.addEventListener('click', () => void saveAndMaybeAdvance(false));
  const saveNext = el('button', 'save-next', 'Save + next image') as HTMLButtonElement;
  saveNext.disabled = !session.canSave;
  saveNext.addEventListener('click', () => void saveAndMaybeAdvance(true));
  controls.append(save, saveNext);
  root.append(controls);

  const panel = el('aside', 'panel');
  panel.id = 'guideline-panel';
  root.append(panel);
  renderDiagnostics(session);
}

function renderDiagnostics(session: WorkbenchSession): void {
  for (let i = 0; i < SLOT_COUNT; i++) {
    const marks = root.querySelector<HTMLElement>(`[data-marks-for="${i}"]`);
    if (!marks) continue;
    marks.replaceChildren(
      ...session.diagnosticsForSlot(i).map((d) => {
        const mark = el('span', `mark ${d.severity}`, `${d.rule}: ${d.message}`);
        mark.dataset.rule = d.rule;
        return mark;
      }),
    );
  }
  const setMarks = root.querySelector<HTMLElement>('.set-marks');
  setMarks?.replaceChildren(
    ...session.setLevelDiagnostics.map((d) => el('span', `mark ${d.severity}`, `${d.rule}: ${d.message}`)),
  );

  const entries = buildPanel(controller.rules, session.lastReport);
  const panel = root.querySelector<HTMLElement>('#guideline-panel');
  if (panel) {
    panel.replaceChildren(
      el('h2', allGreen(entries) ? 'all-green' : '', 'Guidelines'),
      ...entries.map((entry) => {
        const row = el('div', `rule ${entry.state}`);
        row.append(
          el('span', 'rule-id', entry.rule.id),
          el('span', `badge ${entry.rule.checkability}`, entry.rule.checkability),
          el('span', 'summary', entry.rule.summary),
        );
        return row;
      }),
    );
  }
  for (const button of root.querySelectorAll<HTMLButtonElement>('.controls button')) {
    button.disabled = !session.canSave;
  }
}

async function saveAndMaybeAdvance(advance: boolean): Promise<void> {
  const saved = await controller.save();
  if (saved && advance) await controller.loadNext();
  else if (controller.session) renderDiagnostics(controller.session);
}

document.addEventListener('keydown', (event) => {
  if (event.ctrlKey && event.key === 's') {
    event.preventDefault();
    void saveAndMaybeAdvance(false);
  } else if (event.ctrlKey && event.key === 'Enter') {
    event.preventDefault();
    void saveAndMaybeAdvance(true);
  }
});

window.addEventListener('beforeunload', (event) => {
  if (controller?.session?.dirty) event.preventDefault();
});

controller = new WorkbenchController(client, {
  onSession: renderSession,
  onLint: renderDiagnostics,
  onConflict: renderConflict,
  onComplete: renderCompletion,
  onError: (err) => {
    const banner = el('div', 'banner offline', `Lint results may be stale: ${String(err)}`);
    root.prepend(banner);
    setTimeout(() => banner.remove(), 4000);
  },
});

void controller.start();
