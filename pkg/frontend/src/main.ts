import { ApiClient } from './api.js';
import { ConsoleController } from './controller.js';
import { createDomView } from './views.js';
import type { Mode } from './types.js';

const params = new URLSearchParams(window.location.search);
const api = new ApiClient(params.get('api') ?? 'http://127.0.0.1:8000');

let controller: ConsoleController;
const view = createDomView(() => controller);
controller = new ConsoleController(api, view);

document.getElementById('load-preset')!.addEventListener('click', () => {
  void controller.loadPreset();
});
document.getElementById('mode')!.addEventListener('change', (ev) => {
  void controller.setMode((ev.target as HTMLSelectElement).value as Mode);
});
document.getElementById('apply-weights')!.addEventListener('click', () => {
  void controller.applyDerivedWeights();
});
document.getElementById('allow-inconsistent')!.addEventListener('change', (ev) => {
  controller.setAllowInconsistent((ev.target as HTMLInputElement).checked);
});

void controller.loadPreset();
