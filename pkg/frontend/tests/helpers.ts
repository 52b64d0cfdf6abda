/**
 * Test harness: a fetch mock that answers with payloads captured from the
 * real backend over the bundled fixture dataset, recording every request
 * so tests can assert that rendered numbers trace back to the wire.
 */

import fixturesJson from './fixtures.json';
import type {
  PlayersResponse,
  PlayerRoleRow,
  TrendResponse,
  WeightProfile,
} from '../src/types.js';

export const fixtures = fixturesJson as unknown as {
  roles: { roles: { role: string; display_name: string; x_lo: number; x_hi: number; y_lo: number; y_hi: number }[] };
  profiles: { profiles: WeightProfile[] };
  players_default: PlayersResponse;
  players_filtered: PlayersResponse;
  players_custom: PlayersResponse;
  player_detail_P001: Record<string, unknown>;
  similar_P001: Record<string, unknown>;
  trend_P001_central_FW: TrendResponse;
  trend_P001_central_MF: TrendResponse;
  trend_P011_left_MF: TrendResponse;
  trend_P001_central_FW_custom: TrendResponse;
  distribution_default: { profile: string; stats: { role: string }[] };
  distribution_custom: { profile: string; stats: { role: string }[] };
  profile_created: WeightProfile;
};

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

function applyRowFilters(base: PlayersResponse, params: URLSearchParams): PlayersResponse {
  let rows: PlayerRoleRow[] = base.rows;
  const nameLike = params.get('name_like');
  if (nameLike) {
    rows = rows.filter((r) => r.name.toLowerCase().includes(nameLike.toLowerCase()));
  }
  const role = params.get('role');
  if (role) {
    const wanted = new Set(role.split(','));
    rows = rows.filter((r) => wanted.has(r.role));
  }
  const ageMax = params.get('age_max');
  if (ageMax !== null) rows = rows.filter((r) => r.age <= Number(ageMax));
  const ageMin = params.get('age_min');
  if (ageMin !== null) rows = rows.filter((r) => r.age >= Number(ageMin));
  const trendMin = params.get('trend_min');
  if (trendMin !== null) {
    rows = rows.filter(
      (r) => r.trend_percentage !== null && r.trend_percentage >= Number(trendMin),
    );
  }
  const minMatches = params.get('min_matches');
  if (minMatches !== null) rows = rows.filter((r) => r.n_matches >= Number(minMatches));
  return { ...base, rows, total: rows.length };
}

export interface RecordedCall {
  method: string;
  path: string;
  params: URLSearchParams;
  body?: unknown;
}

export class MockServer {
  calls: RecordedCall[] = [];
  created: WeightProfile[] = [];
  /** Optional per-path delay (ms) to exercise out-of-order responses. */
  delays = new Map<string, number>();
  private seq = 100;

  fetch = async (input: string, init?: RequestInit): Promise<Response> => {
    const url = new URL(input, 'http://mock.test');
    const path = url.pathname;
    const params = url.searchParams;
    const method = init?.method ?? 'GET';
    const call: RecordedCall = { method, path, params };
    if (init?.body) call.body = JSON.parse(String(init.body));
    this.calls.push(call);

    const delay = this.delays.get(path);
    if (delay) await new Promise((resolve) => setTimeout(resolve, delay));

    return this.route(method, path, params, call.body);
  };

  requests(path: string): RecordedCall[] {
    return this.calls.filter((c) => c.path === path);
  }

  private route(
    method: string,
    path: string,
    params: URLSearchParams,
    body: unknown,
  ): Response {
    if (path === '/api/roles') return jsonResponse(fixtures.roles);

    if (path === '/api/profiles' && method === 'GET') {
      return jsonResponse({
        profiles: [...fixtures.profiles.profiles, ...this.created],
      });
    }

    if (path === '/api/profiles' && method === 'POST') {
      const draft = body as { name: string; weights: Record<string, number> };
      for (const feature of Object.keys(draft.weights)) {
        const known = Object.prototype.hasOwnProperty.call(
          fixtures.profiles.profiles[0].weights,
          feature,
        );
        if (!known) {
          return jsonResponse(
            { status: 400, code: 'unknown-feature', message: `unknown feature '${feature}'` },
            400,
          );
        }
      }
      if ([...fixtures.profiles.profiles, ...this.created].some((p) => p.name === draft.name)) {
        return jsonResponse(
          { status: 409, code: 'duplicate-name', message: 'duplicate' },
          409,
        );
      }
      this.seq += 1;
      const profile: WeightProfile = {
        profile_id: `wp${this.seq}`,
        name: draft.name,
        created_at: '2019-06-01T00:00:00+00:00',
        weights: draft.weights,
      };
      this.created.push(profile);
      return jsonResponse(profile, 201);
    }

    if (path === '/api/players') {
      const profile = params.get('profile');
      const base =
        profile && profile !== 'default' ? fixtures.players_custom : fixtures.players_default;
      return jsonResponse(applyRowFilters(base, params));
    }

    const detail = path.match(/^\/api\/players\/([^/]+)$/);
    if (detail) {
      return jsonResponse({ ...fixtures.player_detail_P001, player_id: detail[1] });
    }

    const similar = path.match(/^\/api\/players\/([^/]+)\/similar$/);
    if (similar) {
      return jsonResponse({ ...fixtures.similar_P001, player_id: similar[1] });
    }

    const trend = path.match(/^\/api\/players\/([^/]+)\/trend$/);
    if (trend) {
      const role = params.get('role') ?? '';
      const profile = params.get('profile');
      const custom = profile && profile !== 'default';
      let payload: TrendResponse;
      if (trend[1] === 'P011' && role === 'left_MF') payload = fixtures.trend_P011_left_MF;
      else if (role === 'central_MF') payload = fixtures.trend_P001_central_MF;
      else if (custom) payload = fixtures.trend_P001_central_FW_custom;
      else payload = fixtures.trend_P001_central_FW;
      return jsonResponse({
        ...payload,
        player_id: trend[1],
        kind: (params.get('kind') ?? 'long') as 'long' | 'short',
      });
    }

    if (path === '/api/stats/score-distribution') {
      const profile = params.get('profile');
      const custom = profile && profile !== 'default';
      return jsonResponse(custom ? fixtures.distribution_custom : fixtures.distribution_default);
    }

    return jsonResponse({ status: 404, code: 'not-found', message: 'Not Found' }, 404);
  }
}

export function flushAsync(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
