/**
 * API payload types, mirroring the server's published response schemas.
 */

export type RoleId =
  | 'GK'
  | 'left_CB'
  | 'central_CB'
  | 'right_CB'
  | 'left_MF'
  | 'central_MF'
  | 'right_MF'
  | 'left_FW'
  | 'central_FW'
  | 'right_FW';

export interface HealthResponse {
  status: 'ok';
  players: number;
  matches: number;
}

export interface PlayerRoleRow {
  player_id: string;
  name: string;
  age: number;
  role: RoleId;
  n_matches: number;
  playerank_mean: number;
  trend_percentage: number | null;
  trend_long: number | null;
  trend_short: number | null;
}

export interface PlayersResponse {
  rows: PlayerRoleRow[];
  total: number;
  limit: number;
  offset: number;
}

export interface RoleCount {
  role: RoleId;
  matches: number;
}

export interface PlayerDetail {
  player_id: string;
  name: string;
  age: number;
  birth_date: string;
  preferred_foot: string | null;
  n_matches: number;
  roles: RoleCount[];
}

export interface ScoreRow {
  match_id: string;
  date: string;
  role: RoleId;
  score: number;
}

export interface ScoresResponse {
  player_id: string;
  profile: string;
  rows: ScoreRow[];
}

export interface SeriesPoint {
  match_id: string;
  date: string;
  score: number;
}

export interface FittedPoint {
  match_id: string;
  date: string;
  value: number;
}

export interface TrendResponse {
  player_id: string;
  profile: string;
  role: RoleId | null;
  kind: 'long' | 'short';
  lambda: number | null;
  n_matches: number;
  slope: number | null;
  intercept: number | null;
  trend_percentage: number | null;
  series: SeriesPoint[];
  fitted: FittedPoint[];
}

export interface SimilarEntry {
  player_id: string;
  name: string;
  similarity: number;
}

export interface SimilarResponse {
  player_id: string;
  k: number;
  results: SimilarEntry[];
}

export interface ZoneRect {
  role: RoleId;
  display_name: string;
  x_lo: number;
  x_hi: number;
  y_lo: number;
  y_hi: number;
}

export interface RolesResponse {
  roles: ZoneRect[];
}

export interface BoxplotStats {
  role: RoleId;
  n: number;
  min: number;
  q1: number;
  median: number;
  q3: number;
  max: number;
  whisker_lo: number;
  whisker_hi: number;
  outliers: number[];
}

export interface DistributionResponse {
  profile: string;
  stats: BoxplotStats[];
}

export interface WeightProfile {
  profile_id: string;
  name: string;
  created_at: string;
  weights: Record<string, number>;
}

export interface ProfilesResponse {
  profiles: WeightProfile[];
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  detail?: string | null;
}
