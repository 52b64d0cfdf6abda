/**
 * Player cards: the focused player's profile plus players who occupy the
 * pitch most similarly.
 */

import type { PlayerDetail, SimilarResponse } from './types.js';
import { formatNumber } from './table.js';

export function renderCards(
  container: HTMLElement,
  detail: PlayerDetail,
  similar: SimilarResponse,
): void {
  container.replaceChildren();

  const card = document.createElement('div');
  card.className = 'card card--player';
  const title = document.createElement('h3');
  title.textContent = detail.name;
  card.appendChild(title);

  const meta = document.createElement('p');
  meta.className = 'card__meta';
  const roles = detail.roles
    .map((r) => `${r.role.replace('_', ' ')} (${r.matches})`)
    .join(', ');
  meta.textContent =
    `age ${detail.age} · ${detail.n_matches} matches · ${roles}` +
    (detail.preferred_foot ? ` · ${detail.preferred_foot}-footed` : '');
  card.appendChild(meta);
  container.appendChild(card);

  const similarCard = document.createElement('div');
  similarCard.className = 'card card--similar';
  const head = document.createElement('h4');
  head.textContent = 'Plays the pitch like';
  similarCard.appendChild(head);

  const list = document.createElement('ul');
  for (const entry of similar.results) {
    const item = document.createElement('li');
    item.dataset.playerId = entry.player_id;
    item.dataset.similarity = String(entry.similarity);
    item.textContent = `${entry.name} — ${formatNumber(entry.similarity, 3)}`;
    list.appendChild(item);
  }
  similarCard.appendChild(list);
  container.appendChild(similarCard);
}
