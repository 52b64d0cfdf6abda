/**
 * Multi-player trend chart (SVG): raw score series plus fitted trend lines.
 *
 * One raw polyline and one dashed fitted line per checked (player, role)
 * row; the fitted values come from the API, the chart never fits anything
 * itself.
 */

import type { TrendResponse } from './types.js';
import { linearScale } from './boxplot.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export const CHART_W = 720;
export const CHART_H = 260;
const MARGIN = { top: 14, right: 16, bottom: 30, left: 46 };

export const SERIES_COLORS = [
  '#1f77b4', '#ff7f0e', '#2ca02c', '#d62728', '#9467bd',
  '#8c564b', '#e377c2', '#7f7f7f', '#bcbd22', '#17becf',
];

export interface TrendSeries {
  key: string; // "playerId:role"
  label: string;
  trend: TrendResponse;
}

function el(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, String(value));
  return node;
}

function pointsAttr(xs: number[], ys: number[]): string {
  return xs.map((x, i) => `${x.toFixed(2)},${ys[i].toFixed(2)}`).join(' ');
}

export function renderTrendChart(container: HTMLElement, seriesList: TrendSeries[]): SVGSVGElement {
  container.replaceChildren();
  const svg = el('svg', {
    viewBox: `0 0 ${CHART_W} ${CHART_H}`,
    class: 'trend-chart',
  }) as SVGSVGElement;

  if (seriesList.length === 0) {
    const placeholder = el('text', {
      x: CHART_W / 2, y: CHART_H / 2, 'text-anchor': 'middle', class: 'trend-chart__empty',
    });
    placeholder.textContent = 'Check players in the table to compare their score evolution';
    svg.appendChild(placeholder);
    container.appendChild(svg);
    return svg;
  }

  const allValues: number[] = [];
  let maxLen = 1;
  for (const { trend } of seriesList) {
    for (const p of trend.series) allValues.push(p.score);
    for (const p of trend.fitted) allValues.push(p.value);
    maxLen = Math.max(maxLen, trend.series.length);
  }
  const lo = Math.min(...allValues);
  const hi = Math.max(...allValues);
  const y = linearScale(lo === hi ? [lo - 1, hi + 1] : [lo, hi], [CHART_H - MARGIN.bottom, MARGIN.top]);
  const x = linearScale([0, Math.max(maxLen - 1, 1)], [MARGIN.left, CHART_W - MARGIN.right]);

  const axis = el('line', {
    x1: MARGIN.left, y1: CHART_H - MARGIN.bottom,
    x2: CHART_W - MARGIN.right, y2: CHART_H - MARGIN.bottom,
    class: 'trend-chart__axis',
  });
  svg.appendChild(axis);

  seriesList.forEach((entry, i) => {
    const color = SERIES_COLORS[i % SERIES_COLORS.length];
    const xs = entry.trend.series.map((_, j) => x(j));
    svg.appendChild(
      el('polyline', {
        points: pointsAttr(xs, entry.trend.series.map((p) => y(p.score))),
        class: 'trend-chart__series',
        'data-key': entry.key,
        fill: 'none',
        stroke: color,
      }),
    );
    if (entry.trend.fitted.length > 0) {
      svg.appendChild(
        el('polyline', {
          points: pointsAttr(
            entry.trend.fitted.map((_, j) => x(j)),
            entry.trend.fitted.map((p) => y(p.value)),
          ),
          class: 'trend-chart__fit',
          'data-key': entry.key,
          fill: 'none',
          stroke: color,
          'stroke-dasharray': '5 3',
        }),
      );
    }
    const legend = el('text', {
      x: MARGIN.left + 4,
      y: MARGIN.top + 12 * (i + 1) - 4,
      class: 'trend-chart__legend',
      fill: color,
    });
    legend.textContent = entry.label;
    svg.appendChild(legend);
  });

  container.appendChild(svg);
  return svg;
}
