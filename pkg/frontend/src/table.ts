/**
 * Players table: one row per (player, role), checkbox-selectable.
 *
 * A player can legitimately appear in several rows (different roles in
 * different matches), so selection keys are "playerId:role". Displayed
 * numbers are the API payload fields formatted for reading, nothing is
 * recomputed here.
 */

import type { PlayerRoleRow } from './types.js';

export function rowKey(row: PlayerRoleRow): string {
  return `${row.player_id}:${row.role}`;
}

export function formatNumber(value: number | null, digits = 2): string {
  if (value === null) return '–';
  return value.toFixed(digits);
}

export interface TableCallbacks {
  onToggle(key: string, checked: boolean): void;
  onFocus(playerId: string): void;
}

const HEADERS = [
  '', 'Name', 'Age', 'Role', 'Matches', 'PlayeRankMean', 'TrendPercentage',
];

export function renderPlayersTable(
  container: HTMLElement,
  rows: PlayerRoleRow[],
  selected: ReadonlySet<string>,
  callbacks: TableCallbacks,
): HTMLTableElement {
  container.replaceChildren();
  const table = document.createElement('table');
  table.className = 'players-table';

  const thead = table.createTHead();
  const headRow = thead.insertRow();
  for (const header of HEADERS) {
    const th = document.createElement('th');
    th.textContent = header;
    headRow.appendChild(th);
  }

  const tbody = table.createTBody();
  for (const row of rows) {
    const key = rowKey(row);
    const tr = tbody.insertRow();
    tr.dataset.key = key;

    const checkboxCell = tr.insertCell();
    const checkbox = document.createElement('input');
    checkbox.type = 'checkbox';
    checkbox.checked = selected.has(key);
    checkbox.addEventListener('change', () => callbacks.onToggle(key, checkbox.checked));
    checkboxCell.appendChild(checkbox);

    const nameCell = tr.insertCell();
    const nameButton = document.createElement('button');
    nameButton.type = 'button';
    nameButton.className = 'players-table__name';
    nameButton.textContent = row.name;
    nameButton.addEventListener('click', () => callbacks.onFocus(row.player_id));
    nameCell.appendChild(nameButton);

    tr.insertCell().textContent = String(row.age);
    tr.insertCell().textContent = row.role.replace('_', ' ');
    tr.insertCell().textContent = String(row.n_matches);
    const meanCell = tr.insertCell();
    meanCell.textContent = formatNumber(row.playerank_mean);
    meanCell.dataset.raw = String(row.playerank_mean);
    const trendCell = tr.insertCell();
    trendCell.textContent =
      row.trend_percentage === null ? '–' : `${formatNumber(row.trend_percentage, 1)}%`;
    trendCell.dataset.raw = String(row.trend_percentage);
  }

  container.appendChild(table);
  return table;
}
