import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError, playersQueryString } from '../src/api.js';
import { MockServer, fixtures } from './helpers.js';

describe('playersQueryString', () => {
  it('renders the scout query exactly as the server expects', () => {
    const qs = playersQueryString({
      ageMax: 21,
      trendMin: 0,
      minMatches: 3,
      sort: 'trend_pct:desc,age:asc,mean:desc',
    });
    expect(qs).toBe('?age_max=21&trend_min=0&min_matches=3&sort=trend_pct%3Adesc%2Cage%3Aasc%2Cmean%3Adesc');
  });

  it('joins roles with commas and omits empty filters', () => {
    expect(playersQueryString({ roles: ['left_CB', 'central_FW'] })).toBe(
      '?role=left_CB%2Ccentral_FW',
    );
    expect(playersQueryString({})).toBe('');
  });
});

describe('ApiClient', () => {
  it('fetches and types payloads', async () => {
    const server = new MockServer();
    const api = new ApiClient('', server.fetch);
    const roles = await api.roles();
    expect(roles.roles).toHaveLength(10);
    const players = await api.players({ ageMax: 21 });
    expect(players.rows.every((r) => r.age <= 21)).toBe(true);
  });

  it('raises ApiError with server code on failures', async () => {
    const server = new MockServer();
    const api = new ApiClient('', server.fetch);
    await expect(api.createProfile('x', { flying_kick: 1 })).rejects.toMatchObject({
      status: 400,
      code: 'unknown-feature',
    });
    await expect(
      api.createProfile(fixtures.profiles.profiles[0].name, { goals: 1 }),
    ).rejects.toBeInstanceOf(ApiError);
  });

  it('creates profiles through POST with a JSON body', async () => {
    const server = new MockServer();
    const api = new ApiClient('', server.fetch);
    const created = await api.createProfile('mine', { goals: 9 });
    expect(created.profile_id).toMatch(/^wp/);
    const post = server.calls.find((c) => c.method === 'POST');
    expect(post?.body).toEqual({ name: 'mine', weights: { goals: 9 } });
  });
});
