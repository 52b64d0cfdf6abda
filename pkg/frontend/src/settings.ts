/**
 * Settings panel: one weight slider per catalogue feature, goal weight
 * pinned first, staged edits applied with an explicit button.
 *
 * Sliders never trigger recomputes on their own; Apply posts a new
 * profile and hands the created id back to the app, which refetches
 * whatever depends on scores.
 */

export interface SettingsCallbacks {
  onApply(weights: Record<string, number>): void;
}

const SLIDER_MIN = -10;
const SLIDER_MAX = 10;
const SLIDER_STEP = 0.5;

export function sliderOrder(weights: Record<string, number>): string[] {
  const names = Object.keys(weights);
  names.sort();
  const pinned = names.filter((n) => n === 'goals');
  const rest = names.filter((n) => n !== 'goals');
  return [...pinned, ...rest];
}

export function renderSettings(
  container: HTMLElement,
  weights: Record<string, number>,
  callbacks: SettingsCallbacks,
): void {
  container.replaceChildren();
  const staged: Record<string, number> = { ...weights };

  const list = document.createElement('div');
  list.className = 'settings__sliders';

  for (const feature of sliderOrder(weights)) {
    const row = document.createElement('label');
    row.className = feature === 'goals' ? 'slider slider--goal' : 'slider';
    row.dataset.feature = feature;

    const caption = document.createElement('span');
    caption.className = 'slider__caption';
    caption.textContent = feature === 'goals' ? 'importance of scoring a goal' : feature;
    row.appendChild(caption);

    const input = document.createElement('input');
    input.type = 'range';
    input.min = String(Math.min(SLIDER_MIN, weights[feature]));
    input.max = String(Math.max(SLIDER_MAX, weights[feature]));
    input.step = String(SLIDER_STEP);
    input.value = String(weights[feature]);
    input.dataset.feature = feature;

    const value = document.createElement('span');
    value.className = 'slider__value';
    value.textContent = String(weights[feature]);

    input.addEventListener('input', () => {
      staged[feature] = Number(input.value);
      value.textContent = input.value;
    });

    row.appendChild(input);
    row.appendChild(value);
    list.appendChild(row);
  }

  const apply = document.createElement('button');
  apply.type = 'button';
  apply.className = 'settings__apply';
  apply.textContent = 'Apply weights';
  apply.addEventListener('click', () => callbacks.onApply({ ...staged }));

  container.appendChild(list);
  container.appendChild(apply);
}
