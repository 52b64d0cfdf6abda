/**
 * Per-role score distribution boxplot (SVG).
 *
 * Draws one box per role from the server's precomputed five-number
 * summaries; no statistics are computed client-side.
 */

import type { BoxplotStats } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export const PLOT_W = 420;
export const PLOT_H = 220;
const MARGIN = { top: 12, right: 12, bottom: 34, left: 44 };

export interface LinearScale {
  (value: number): number;
  domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): LinearScale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  const scale = ((value: number) => r0 + ((value - d0) / span) * (r1 - r0)) as LinearScale;
  scale.domain = domain;
  return scale;
}

export function valueExtent(stats: BoxplotStats[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const s of stats) {
    lo = Math.min(lo, s.min);
    hi = Math.max(hi, s.max);
  }
  if (!Number.isFinite(lo)) return [0, 1];
  if (lo === hi) return [lo - 1, hi + 1];
  return [lo, hi];
}

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
  return node;
}

export function renderBoxplot(container: HTMLElement, stats: BoxplotStats[]): SVGSVGElement {
  container.replaceChildren();
  const svg = el('svg', {
    viewBox: `0 0 ${PLOT_W} ${PLOT_H}`,
    class: 'boxplot',
  }) as SVGSVGElement;

  if (stats.length === 0) {
    container.appendChild(svg);
    return svg;
  }

  const y = linearScale(valueExtent(stats), [PLOT_H - MARGIN.bottom, MARGIN.top]);
  const innerW = PLOT_W - MARGIN.left - MARGIN.right;
  const slot = innerW / stats.length;
  const boxW = Math.min(26, slot * 0.6);

  stats.forEach((s, i) => {
    const cx = MARGIN.left + slot * (i + 0.5);
    const group = el('g', { class: 'box', 'data-role': s.role, 'data-n': s.n });
    group.appendChild(
      el('line', { x1: cx, y1: y(s.whisker_lo), x2: cx, y2: y(s.whisker_hi), class: 'box__whisker' }),
    );
    group.appendChild(
      el('rect', {
        x: cx - boxW / 2,
        y: y(s.q3),
        width: boxW,
        height: Math.max(y(s.q1) - y(s.q3), 0.5),
        class: 'box__iqr',
      }),
    );
    group.appendChild(
      el('line', {
        x1: cx - boxW / 2, y1: y(s.median), x2: cx + boxW / 2, y2: y(s.median),
        class: 'box__median',
      }),
    );
    for (const cap of [s.whisker_lo, s.whisker_hi]) {
      group.appendChild(
        el('line', {
          x1: cx - boxW / 3, y1: y(cap), x2: cx + boxW / 3, y2: y(cap), class: 'box__cap',
        }),
      );
    }
    for (const outlier of s.outliers) {
      group.appendChild(el('circle', { cx, cy: y(outlier), r: 1.8, class: 'box__outlier' }));
    }
    const label = el('text', {
      x: cx, y: PLOT_H - 14, class: 'box__label', 'text-anchor': 'middle',
    });
    label.textContent = s.role.replace('_', ' ');
    group.appendChild(label);
    svg.appendChild(group);
  });

  container.appendChild(svg);
  return svg;
}
