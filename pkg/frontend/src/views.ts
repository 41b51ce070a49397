/** DOM rendering. Thin by design: all decisions live in the controller. */

import type { ConsoleController, ViewHooks } from './controller.js';
import type { AhpResponse, ResultJson, SensitivityDoc } from './types.js';
import type { CellError, MatrixDraft } from './validation.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

export function createDomView(getController: () => ConsoleController): ViewHooks {
  return {
    renderMatrix(draft: MatrixDraft): void {
      const table = el<HTMLTableElement>('matrix');
      table.innerHTML = '';
      const head = table.insertRow();
      head.insertCell().textContent = 'alternative';
      draft.criteria.forEach((c) => {
        const cell = head.insertCell();
        cell.textContent = `${c.name} (${c.direction})`;
        cell.className = 'head';
      });
      draft.alternatives.forEach((name, i) => {
        const row = table.insertRow();
        row.insertCell().textContent = name;
        draft.cells[i].forEach((text, j) => {
          const cell = row.insertCell();
          const input = document.createElement('input');
          input.value = text;
          input.id = `cell-${i}-${j}`;
          input.addEventListener('change', () => {
            void getController().editCell(i, j, input.value);
          });
          cell.appendChild(input);
        });
      });
    },

    renderWeights(weights: number[]): void {
      const box = el<HTMLDivElement>('weights');
      box.innerHTML = '';
      weights.forEach((w, j) => {
        const row = document.createElement('div');
        row.className = 'slider-row';
        const label = document.createElement('label');
        label.textContent = getController().state.draft.criteria[j]?.name ?? `w${j + 1}`;
        const slider = document.createElement('input');
        slider.type = 'range';
        slider.min = '0.01';
        slider.max = '0.99';
        slider.step = '0.001';
        slider.value = String(w);
        slider.id = `weight-${j}`;
        slider.addEventListener('input', () => {
          getController().adjustWeight(j, Number(slider.value));
        });
        slider.addEventListener('change', () => getController().endWeightDrag());
        const value = document.createElement('span');
        value.textContent = w.toFixed(3);
        row.append(label, slider, value);
        box.appendChild(row);
      });
    },

    renderRanking(result: ResultJson): void {
      const list = el<HTMLOListElement>('ranking');
      list.innerHTML = '';
      result.alternatives.forEach((alt) => {
        const item = document.createElement('li');
        item.textContent = `${alt.name} — K ${alt.K.toFixed(3)}`;
        list.appendChild(item);
      });
      const bars = el<HTMLDivElement>('bars');
      bars.innerHTML = '';
      const rows = [{ name: 'optimal', K: result.optimal.K }, ...result.alternatives];
      rows.forEach((r) => {
        const row = document.createElement('div');
        row.className = 'bar-row';
        const label = document.createElement('span');
        label.className = 'bar-label';
        label.textContent = r.name;
        const bar = document.createElement('div');
        bar.className = r.name === 'optimal' ? 'bar optimal' : 'bar';
        bar.style.width = `${Math.round(r.K * 100)}%`;
        bar.textContent = r.K.toFixed(3);
        row.append(label, bar);
        bars.appendChild(row);
      });
    },

    renderSensitivity(report: SensitivityDoc): void {
      const box = el<HTMLDivElement>('sensitivity');
      const [lo, hi] = report.stability_interval;
      box.innerHTML = '';
      const title = document.createElement('p');
      title.textContent =
        `${report.criterion}: top alternative stable for weights ` +
        `${lo.toFixed(3)} to ${hi.toFixed(3)} (baseline ${report.baseline_weight})`;
      box.appendChild(title);
      const table = document.createElement('table');
      const head = table.insertRow();
      head.insertCell().textContent = 'weight';
      Object.keys(report.k_trajectories).forEach((name) => {
        head.insertCell().textContent = name;
      });
      report.grid.forEach((g, gi) => {
        const row = table.insertRow();
        row.insertCell().textContent = g.toFixed(2);
        Object.values(report.k_trajectories).forEach((traj) => {
          row.insertCell().textContent = traj[gi].toFixed(3);
        });
      });
      box.appendChild(table);
    },

    renderConsistency(resp: AhpResponse | null, badge): void {
      const node = el<HTMLSpanElement>('cr-badge');
      if (!resp) {
        node.textContent = '—';
        node.className = 'badge';
        return;
      }
      node.textContent = `CR ${resp.consistency.consistency_ratio.toFixed(3)}`;
      node.className = `badge ${badge}`;
      el<HTMLDivElement>('ahp-weights').textContent =
        'derived weights: ' + resp.weights.map((w) => w.toFixed(4)).join(', ');
    },

    renderPairwise(grid: number[][]): void {
      const table = el<HTMLTableElement>('pairwise');
      table.innerHTML = '';
      grid.forEach((rowVals, i) => {
        const row = table.insertRow();
        rowVals.forEach((v, j) => {
          const cell = row.insertCell();
          if (i === j) {
            cell.textContent = '1';
            return;
          }
          const input = document.createElement('input');
          input.value = formatJudgment(v);
          input.id = `pw-${i}-${j}`;
          input.addEventListener('change', () => {
            getController().editPairwise(i, j, input.value);
          });
          cell.appendChild(input);
        });
      });
    },

    setApplyWeightsEnabled(enabled: boolean): void {
      el<HTMLButtonElement>('apply-weights').disabled = !enabled;
    },

    flashRankChange(): void {
      const node = el<HTMLSpanElement>('rank-change');
      node.classList.remove('flash');
      void node.offsetWidth; // restart the animation
      node.classList.add('flash');
    },

    showCellErrors(errors: CellError[]): void {
      errors.forEach((e) => {
        const input = document.getElementById(`cell-${e.row}-${e.col}`);
        input?.classList.add('invalid');
        const note = document.createElement('div');
        note.className = 'cell-error';
        note.textContent = `${e.code}: ${e.message}`;
        input?.parentElement?.appendChild(note);
      });
      if (errors.length) {
        this.showError(errors[0].code, errors[0].message);
      }
    },

    showError(code: string, message: string): void {
      el<HTMLDivElement>('errors').textContent = `${code}: ${message}`;
    },

    clearErrors(): void {
      el<HTMLDivElement>('errors').textContent = '';
      document.querySelectorAll('.cell-error').forEach((n) => n.remove());
      document.querySelectorAll('.invalid').forEach((n) => n.classList.remove('invalid'));
    },
  };
}

export function formatJudgment(v: number): string {
  if (v >= 1) return Number.isInteger(v) ? String(v) : v.toFixed(4);
  const inv = 1 / v;
  if (Number.isInteger(Math.round(inv * 1e9) / 1e9)) return `1/${Math.round(inv)}`;
  return v.toFixed(4);
}
