/**
 * Typed client for the scoutbench HTTP API.
 *
 * Every read goes through a plain GET with URL query parameters; the only
 * mutation is profile creation. All numbers rendered anywhere in the UI
 * come out of these payloads untouched.
 */

import type {
  DistributionResponse,
  HealthResponse,
  PlayerDetail,
  PlayersResponse,
  ProfilesResponse,
  RolesResponse,
  ScoresResponse,
  SimilarResponse,
  TrendResponse,
  WeightProfile,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export interface PlayersQuery {
  nameLike?: string;
  roles?: string[];
  ageMin?: number;
  ageMax?: number;
  trendMin?: number;
  trendMax?: number;
  minMatches?: number;
  sort?: string;
  profile?: string;
  limit?: number;
  offset?: number;
}

export interface TrendQuery {
  kind?: 'long' | 'short';
  lambda?: number;
  role?: string;
  profile?: string;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

function appendParam(params: URLSearchParams, key: string, value: unknown): void {
  if (value === undefined || value === null || value === '') return;
  params.set(key, String(value));
}

export function playersQueryString(query: PlayersQuery): string {
  const params = new URLSearchParams();
  appendParam(params, 'name_like', query.nameLike);
  if (query.roles && query.roles.length > 0) params.set('role', query.roles.join(','));
  appendParam(params, 'age_min', query.ageMin);
  appendParam(params, 'age_max', query.ageMax);
  appendParam(params, 'trend_min', query.trendMin);
  appendParam(params, 'trend_max', query.trendMax);
  appendParam(params, 'min_matches', query.minMatches);
  appendParam(params, 'sort', query.sort);
  appendParam(params, 'profile', query.profile);
  appendParam(params, 'limit', query.limit);
  appendParam(params, 'offset', query.offset);
  const qs = params.toString();
  return qs ? `?${qs}` : '';
}

export class ApiClient {
  constructor(
    readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(
        response.status,
        typeof body?.code === 'string' ? body.code : 'http-error',
        typeof body?.message === 'string' ? body.message : `HTTP ${response.status}`,
      );
    }
    return body as T;
  }

  health(): Promise<HealthResponse> {
    return this.request('/api/health');
  }

  players(query: PlayersQuery = {}): Promise<PlayersResponse> {
    return this.request(`/api/players${playersQueryString(query)}`);
  }

  player(playerId: string): Promise<PlayerDetail> {
    return this.request(`/api/players/${encodeURIComponent(playerId)}`);
  }

  scores(playerId: string, profile?: string): Promise<ScoresResponse> {
    const params = new URLSearchParams();
    appendParam(params, 'profile', profile);
    const qs = params.toString();
    return this.request(
      `/api/players/${encodeURIComponent(playerId)}/scores${qs ? `?${qs}` : ''}`,
    );
  }

  trend(playerId: string, query: TrendQuery = {}): Promise<TrendResponse> {
    const params = new URLSearchParams();
    appendParam(params, 'kind', query.kind);
    appendParam(params, 'lambda', query.lambda);
    appendParam(params, 'role', query.role);
    appendParam(params, 'profile', query.profile);
    const qs = params.toString();
    return this.request(
      `/api/players/${encodeURIComponent(playerId)}/trend${qs ? `?${qs}` : ''}`,
    );
  }

  similar(playerId: string, k = 5): Promise<SimilarResponse> {
    return this.request(`/api/players/${encodeURIComponent(playerId)}/similar?k=${k}`);
  }

  roles(): Promise<RolesResponse> {
    return this.request('/api/roles');
  }

  distribution(profile?: string, role?: string): Promise<DistributionResponse> {
    const params = new URLSearchParams();
    appendParam(params, 'role', role);
    appendParam(params, 'profile', profile);
    const qs = params.toString();
    return this.request(`/api/stats/score-distribution${qs ? `?${qs}` : ''}`);
  }

  profiles(): Promise<ProfilesResponse> {
    return this.request('/api/profiles');
  }

  createProfile(name: string, weights: Record<string, number>): Promise<WeightProfile> {
    return this.request('/api/profiles', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({ name, weights }),
    });
  }
}
