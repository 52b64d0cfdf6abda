/**
 * Shareable UI state, round-trippable through the URL query string.
 *
 * Every view the dashboard can show is reconstructible from the URL:
 * serialize(parse(qs)) === qs-normalized and parse(serialize(s)) deep-equals s.
 */

export interface UiState {
  nameQuery: string;
  roles: string[];
  profileId: string;
  ageMin: number | null;
  ageMax: number | null;
  trendMin: number | null;
  trendMax: number | null;
  minMatches: number | null;
  selected: string[]; // "playerId:role" keys checked in the table
  trendKind: 'long' | 'short';
}

export function defaultState(): UiState {
  return {
    nameQuery: '',
    roles: [],
    profileId: 'default',
    ageMin: null,
    ageMax: null,
    trendMin: null,
    trendMax: null,
    minMatches: null,
    selected: [],
    trendKind: 'long',
  };
}

function putNumber(params: URLSearchParams, key: string, value: number | null): void {
  if (value !== null) params.set(key, String(value));
}

export function serializeState(state: UiState): string {
  const params = new URLSearchParams();
  if (state.nameQuery) params.set('q', state.nameQuery);
  if (state.roles.length > 0) params.set('roles', state.roles.join(','));
  if (state.profileId !== 'default') params.set('profile', state.profileId);
  putNumber(params, 'age_min', state.ageMin);
  putNumber(params, 'age_max', state.ageMax);
  putNumber(params, 'trend_min', state.trendMin);
  putNumber(params, 'trend_max', state.trendMax);
  putNumber(params, 'min_matches', state.minMatches);
  if (state.selected.length > 0) params.set('sel', state.selected.join(','));
  if (state.trendKind !== 'long') params.set('trend_kind', state.trendKind);
  return params.toString();
}

function numberOrNull(raw: string | null): number | null {
  if (raw === null || raw === '') return null;
  const value = Number(raw);
  return Number.isFinite(value) ? value : null;
}

export function parseState(queryString: string): UiState {
  const params = new URLSearchParams(
    queryString.startsWith('?') ? queryString.slice(1) : queryString,
  );
  const state = defaultState();
  state.nameQuery = params.get('q') ?? '';
  const roles = params.get('roles');
  if (roles) state.roles = roles.split(',').filter((r) => r.length > 0);
  state.profileId = params.get('profile') ?? 'default';
  state.ageMin = numberOrNull(params.get('age_min'));
  state.ageMax = numberOrNull(params.get('age_max'));
  state.trendMin = numberOrNull(params.get('trend_min'));
  state.trendMax = numberOrNull(params.get('trend_max'));
  state.minMatches = numberOrNull(params.get('min_matches'));
  const selected = params.get('sel');
  if (selected) state.selected = selected.split(',').filter((s) => s.length > 0);
  state.trendKind = params.get('trend_kind') === 'short' ? 'short' : 'long';
  return state;
}
