/**
 * Dashboard wiring: five bands top to bottom, from broad context down to
 * per-player detail.
 *
 *   1. Navbar      — search by name, search by role
 *   2. Pitch/Set   — zone-highlighting pitch, weight sliders, boxplot
 *   3. Table       — filter sliders + the players table (checkbox rows)
 *   4. Trend       — score evolution of checked rows, long/short fit
 *   5. Cards       — focused player info + most similar players
 *
 * All numbers shown come from API payloads; the UI computes nothing.
 * Controls are debounced, responses are guarded latest-wins, and the
 * whole view state round-trips through the URL query string.
 */

import { ApiClient } from './api.js';
import { debounce, LatestWins } from './debounce.js';
import { defaultState, parseState, serializeState, UiState } from './state.js';
import { renderPitch } from './pitch.js';
import { renderBoxplot } from './boxplot.js';
import { renderTrendChart, TrendSeries } from './trendChart.js';
import { renderPlayersTable } from './table.js';
import { renderSettings } from './settings.js';
import { renderCards } from './cards.js';
import type { ZoneRect } from './types.js';

const SEARCH_MIN_CHARS = 2;
const DEFAULT_LAMBDA = 0.8;

function section(id: string, title: string, className: string): HTMLElement {
  const node = document.createElement('section');
  node.id = id;
  node.className = `band ${className}`;
  if (title) {
    const head = document.createElement('h2');
    head.textContent = title;
    node.appendChild(head);
  }
  return node;
}

function numberInput(id: string, label: string, value: number | null): HTMLLabelElement {
  const wrap = document.createElement('label');
  wrap.className = 'filter';
  const caption = document.createElement('span');
  caption.textContent = label;
  const input = document.createElement('input');
  input.type = 'number';
  input.id = id;
  if (value !== null) input.value = String(value);
  wrap.appendChild(caption);
  wrap.appendChild(input);
  return wrap;
}

function readNumber(root: HTMLElement, id: string): number | null {
  const input = root.querySelector<HTMLInputElement>(`#${id}`);
  if (!input || input.value === '') return null;
  const value = Number(input.value);
  return Number.isFinite(value) ? value : null;
}

export class Dashboard {
  private state: UiState = defaultState();
  private zones: ZoneRect[] = [];
  private names = new Map<string, string>();
  private customProfileSeq = 0;

  private readonly tableGuard = new LatestWins();
  private readonly trendGuard = new LatestWins();
  private readonly cardsGuard = new LatestWins();

  private readonly refreshTableDebounced: () => void;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly win: Window = window,
  ) {
    this.refreshTableDebounced = debounce(() => void this.refreshTable(), 200);
  }

  async init(): Promise<void> {
    this.state = parseState(this.win.location.search);
    this.buildLayout();
    const [roles, profiles] = await Promise.all([this.api.roles(), this.api.profiles()]);
    this.zones = roles.roles;
    this.buildRoleOptions();
    this.drawPitch();

    const active =
      profiles.profiles.find((p) => p.profile_id === this.state.profileId) ??
      profiles.profiles.find((p) => p.profile_id === 'default');
    if (active) {
      this.state.profileId = active.profile_id;
      renderSettings(this.byId('settings-sliders'), active.weights, {
        onApply: (weights) => void this.applyWeights(weights),
      });
    }

    await Promise.all([this.refreshTable(), this.refreshDistribution()]);
    await this.refreshTrendChart();
  }

  // --- layout -------------------------------------------------------------

  private buildLayout(): void {
    this.root.replaceChildren();

    const banner = document.createElement('div');
    banner.id = 'error-banner';
    banner.className = 'error-banner error-banner--hidden';
    this.root.appendChild(banner);

    const navbar = section('navbar', '', 'band--navbar');
    const nameInput = document.createElement('input');
    nameInput.type = 'search';
    nameInput.id = 'search-name';
    nameInput.placeholder = 'Search by name';
    nameInput.value = this.state.nameQuery;
    nameInput.addEventListener('input', () => {
      const text = nameInput.value.trim();
      this.state.nameQuery = text.length >= SEARCH_MIN_CHARS ? text : '';
      this.refreshTableDebounced();
    });
    const roleSelect = document.createElement('select');
    roleSelect.multiple = true;
    roleSelect.id = 'search-role';
    roleSelect.addEventListener('change', () => {
      this.state.roles = Array.from(roleSelect.selectedOptions).map((o) => o.value);
      this.drawPitch();
      void this.refreshTable();
    });
    navbar.appendChild(nameInput);
    navbar.appendChild(roleSelect);
    this.root.appendChild(navbar);

    const pitchBand = section('pitch-band', '', 'band--pitch');
    const pitchBox = document.createElement('div');
    pitchBox.id = 'pitch';
    const settings = document.createElement('div');
    settings.id = 'settings';
    const sliders = document.createElement('div');
    sliders.id = 'settings-sliders';
    const box = document.createElement('div');
    box.id = 'boxplot';
    settings.appendChild(sliders);
    settings.appendChild(box);
    pitchBand.appendChild(pitchBox);
    pitchBand.appendChild(settings);
    this.root.appendChild(pitchBand);

    const tableBand = section('table-band', '', 'band--table');
    const filters = document.createElement('div');
    filters.id = 'filters';
    filters.appendChild(numberInput('age-min', 'age ≥', this.state.ageMin));
    filters.appendChild(numberInput('age-max', 'age ≤', this.state.ageMax));
    filters.appendChild(numberInput('trend-min', 'trend% ≥', this.state.trendMin));
    filters.appendChild(numberInput('trend-max', 'trend% ≤', this.state.trendMax));
    filters.appendChild(numberInput('min-matches', 'matches ≥', this.state.minMatches));
    filters.addEventListener('input', () => {
      this.state.ageMin = readNumber(filters, 'age-min');
      this.state.ageMax = readNumber(filters, 'age-max');
      this.state.trendMin = readNumber(filters, 'trend-min');
      this.state.trendMax = readNumber(filters, 'trend-max');
      this.state.minMatches = readNumber(filters, 'min-matches');
      this.refreshTableDebounced();
    });
    const tableBox = document.createElement('div');
    tableBox.id = 'players-table';
    tableBand.appendChild(filters);
    tableBand.appendChild(tableBox);
    this.root.appendChild(tableBand);

    const trendBand = section('trend-band', '', 'band--trend');
    const kind = document.createElement('select');
    kind.id = 'trend-kind';
    for (const value of ['long', 'short'] as const) {
      const option = document.createElement('option');
      option.value = value;
      option.textContent = value === 'long' ? 'trend_long (all matches equal)' : 'trend_short (recent matches weigh more)';
      option.selected = this.state.trendKind === value;
      kind.appendChild(option);
    }
    kind.addEventListener('change', () => {
      this.state.trendKind = kind.value === 'short' ? 'short' : 'long';
      this.syncUrl();
      void this.refreshTrendChart();
    });
    const chart = document.createElement('div');
    chart.id = 'trend-chart';
    trendBand.appendChild(kind);
    trendBand.appendChild(chart);
    this.root.appendChild(trendBand);

    const cardsBand = section('cards-band', '', 'band--cards');
    const cards = document.createElement('div');
    cards.id = 'cards';
    cardsBand.appendChild(cards);
    this.root.appendChild(cardsBand);
  }

  private byId(id: string): HTMLElement {
    const node = this.root.querySelector<HTMLElement>(`#${id}`);
    if (!node) throw new Error(`layout element #${id} missing`);
    return node;
  }

  private buildRoleOptions(): void {
    const select = this.byId('search-role') as HTMLSelectElement;
    select.replaceChildren();
    for (const zone of this.zones) {
      const option = document.createElement('option');
      option.value = zone.role;
      option.textContent = zone.display_name;
      option.selected = this.state.roles.includes(zone.role);
      select.appendChild(option);
    }
  }

  // --- rendering ------------------------------------------------------------

  private drawPitch(): void {
    renderPitch(this.byId('pitch'), this.zones, new Set(this.state.roles));
  }

  private showError(message: string): void {
    const banner = this.byId('error-banner');
    banner.textContent = message;
    banner.className = 'error-banner';
  }

  private clearError(): void {
    const banner = this.byId('error-banner');
    banner.textContent = '';
    banner.className = 'error-banner error-banner--hidden';
  }

  private syncUrl(): void {
    const qs = serializeState(this.state);
    this.win.history.replaceState(null, '', qs ? `?${qs}` : this.win.location.pathname);
  }

  async refreshTable(): Promise<void> {
    this.syncUrl();
    try {
      const result = await this.tableGuard.run(() =>
        this.api.players({
          nameLike: this.state.nameQuery || undefined,
          roles: this.state.roles.length > 0 ? this.state.roles : undefined,
          ageMin: this.state.ageMin ?? undefined,
          ageMax: this.state.ageMax ?? undefined,
          trendMin: this.state.trendMin ?? undefined,
          trendMax: this.state.trendMax ?? undefined,
          minMatches: this.state.minMatches ?? undefined,
          profile: this.state.profileId,
          limit: 100,
        }),
      );
      if (result === null) return; // a newer request superseded this one
      this.clearError();
      for (const row of result.rows) this.names.set(row.player_id, row.name);
      renderPlayersTable(this.byId('players-table'), result.rows, new Set(this.state.selected), {
        onToggle: (key, checked) => this.toggleRow(key, checked),
        onFocus: (playerId) => void this.focusPlayer(playerId),
      });
    } catch (err) {
      this.showError(`player query failed: ${(err as Error).message}`);
    }
  }

  async refreshDistribution(): Promise<void> {
    try {
      const dist = await this.api.distribution(this.state.profileId);
      renderBoxplot(this.byId('boxplot'), dist.stats);
    } catch (err) {
      this.showError(`distribution failed: ${(err as Error).message}`);
    }
  }

  async refreshTrendChart(): Promise<void> {
    try {
      const result = await this.trendGuard.run(async () => {
        const entries: TrendSeries[] = [];
        for (const key of this.state.selected) {
          const [playerId, role] = key.split(':');
          const trend = await this.api.trend(playerId, {
            kind: this.state.trendKind,
            lambda: this.state.trendKind === 'short' ? DEFAULT_LAMBDA : undefined,
            role,
            profile: this.state.profileId,
          });
          const name = this.names.get(playerId) ?? playerId;
          entries.push({ key, label: `${name} (${role.replace('_', ' ')})`, trend });
        }
        return entries;
      });
      if (result === null) return;
      this.clearError();
      renderTrendChart(this.byId('trend-chart'), result);
    } catch (err) {
      this.showError(`trend fetch failed: ${(err as Error).message}`);
    }
  }

  private toggleRow(key: string, checked: boolean): void {
    const next = new Set(this.state.selected);
    if (checked) next.add(key);
    else next.delete(key);
    this.state.selected = Array.from(next).sort();
    this.syncUrl();
    void this.refreshTrendChart();
  }

  async focusPlayer(playerId: string): Promise<void> {
    try {
      const result = await this.cardsGuard.run(async () => {
        const [detail, similar] = await Promise.all([
          this.api.player(playerId),
          this.api.similar(playerId, 5),
        ]);
        return { detail, similar };
      });
      if (result === null) return;
      this.clearError();
      renderCards(this.byId('cards'), result.detail, result.similar);
    } catch (err) {
      this.showError(`player card failed: ${(err as Error).message}`);
    }
  }

  async applyWeights(weights: Record<string, number>): Promise<void> {
    this.customProfileSeq += 1;
    const name = `custom-${Date.now()}-${this.customProfileSeq}`;
    try {
      const created = await this.api.createProfile(name, weights);
      this.clearError();
      this.state.profileId = created.profile_id;
      this.syncUrl();
      await Promise.all([
        this.refreshDistribution(),
        this.refreshTable(),
        this.refreshTrendChart(),
      ]);
    } catch (err) {
      this.showError(`profile rejected: ${(err as Error).message}`);
    }
  }

  /** Current state snapshot (used by tests and the URL round-trip). */
  snapshot(): UiState {
    return JSON.parse(JSON.stringify(this.state)) as UiState;
  }
}

export async function mount(root: HTMLElement, baseUrl = ''): Promise<Dashboard> {
  const dashboard = new Dashboard(root, new ApiClient(baseUrl));
  await dashboard.init();
  return dashboard;
}
