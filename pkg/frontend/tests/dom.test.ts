// @vitest-environment happy-dom
/** Smoke test of the real DOM layer against captured service responses. */

import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { ConsoleController } from '../src/controller.js';
import { createDomView } from '../src/views.js';
import { fixtureFetch } from './helpers.js';

const SHELL = `
  <div id="errors"></div>
  <table id="matrix"></table>
  <div id="weights"></div>
  <ol id="ranking"></ol>
  <div id="bars"></div>
  <table id="pairwise"></table>
  <span id="cr-badge"></span>
  <div id="ahp-weights"></div>
  <button id="apply-weights"></button>
  <span id="rank-change"></span>
  <div id="sensitivity"></div>
`;

describe('DOM rendering', () => {
  let controller: ConsoleController;

  beforeEach(() => {
    document.body.innerHTML = SHELL;
    const view = createDomView(() => controller);
    controller = new ConsoleController(new ApiClient('http://svc', fixtureFetch()), view);
  });

  it('renders the preset ranking as list items and bars', async () => {
    await controller.loadPreset();
    const items = [...document.querySelectorAll('#ranking li')].map((li) => li.textContent);
    expect(items[0]).toContain('Project 2');
    expect(items).toHaveLength(5);
    const bars = document.querySelectorAll('#bars .bar');
    expect(bars).toHaveLength(6); // optimal row pinned at K = 1 plus five projects
    expect(bars[0].textContent).toBe('1.000');
    expect((bars[0] as HTMLElement).style.width).toBe('100%');
  });

  it('renders editable matrix cells from the preset', async () => {
    await controller.loadPreset();
    const cell = document.getElementById('cell-1-0') as HTMLInputElement;
    expect(cell.value).toBe('13');
  });

  it('marks an invalid cell after a bad edit', async () => {
    await controller.loadPreset();
    await controller.editCell(2, 2, '0');
    expect(document.querySelectorAll('.cell-error').length).toBeGreaterThan(0);
    expect(document.getElementById('errors')!.textContent).toContain('NonPositiveCostValue');
  });
});
