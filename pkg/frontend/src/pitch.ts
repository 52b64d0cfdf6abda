/**
 * SVG soccer pitch with role-zone rectangles.
 *
 * Zone geometry comes straight from GET /api/roles (the server's zone map
 * is the single source of truth); selected roles get the
 * `zone--highlighted` class so the selection drawn on the pitch always
 * matches what the table filters on.
 */

import type { ZoneRect } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

// drawing surface in SVG user units; pitch coordinates are [0,100]^2
export const PITCH_W = 105;
export const PITCH_H = 68;

export function toPitchX(x: number): number {
  return (x / 100) * PITCH_W;
}

export function toPitchY(y: number): number {
  return (y / 100) * PITCH_H;
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function pitchDecoration(svg: SVGSVGElement): void {
  svg.appendChild(
    el('rect', { x: 0, y: 0, width: PITCH_W, height: PITCH_H, class: 'pitch__grass' }),
  );
  svg.appendChild(
    el('line', { x1: PITCH_W / 2, y1: 0, x2: PITCH_W / 2, y2: PITCH_H, class: 'pitch__line' }),
  );
  svg.appendChild(
    el('circle', { cx: PITCH_W / 2, cy: PITCH_H / 2, r: 9.15, class: 'pitch__line' }),
  );
  // penalty boxes, 16.5 deep and 40.32 wide, centred on each goal
  const boxTop = (PITCH_H - 40.32) / 2;
  svg.appendChild(
    el('rect', { x: 0, y: boxTop, width: 16.5, height: 40.32, class: 'pitch__line' }),
  );
  svg.appendChild(
    el('rect', {
      x: PITCH_W - 16.5, y: boxTop, width: 16.5, height: 40.32, class: 'pitch__line',
    }),
  );
}

export function renderPitch(
  container: HTMLElement,
  zones: ZoneRect[],
  highlightedRoles: ReadonlySet<string>,
): SVGSVGElement {
  container.replaceChildren();
  const svg = el('svg', {
    viewBox: `0 0 ${PITCH_W} ${PITCH_H}`,
    class: 'pitch',
    role: 'img',
  });
  pitchDecoration(svg);
  for (const zone of zones) {
    const highlighted = highlightedRoles.has(zone.role);
    const rect = el('rect', {
      x: toPitchX(zone.x_lo),
      y: toPitchY(zone.y_lo),
      width: toPitchX(zone.x_hi - zone.x_lo),
      height: toPitchY(zone.y_hi - zone.y_lo),
      class: highlighted ? 'zone zone--highlighted' : 'zone',
      'data-role': zone.role,
    });
    svg.appendChild(rect);
    if (highlighted) {
      const label = el('text', {
        x: toPitchX((zone.x_lo + zone.x_hi) / 2),
        y: toPitchY((zone.y_lo + zone.y_hi) / 2),
        class: 'zone__label',
        'text-anchor': 'middle',
      });
      label.textContent = zone.display_name;
      svg.appendChild(label);
    }
  }
  container.appendChild(svg);
  return svg;
}
