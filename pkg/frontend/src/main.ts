/** Browser entry point: mount the dashboard on #app. */

import { mount } from './app.js';

const params = new URLSearchParams(window.location.search);
const apiBase = params.get('api') ?? '';

const root = document.getElementById('app');
if (root) {
  mount(root, apiBase).catch((err) => {
    root.textContent = `dashboard failed to start: ${err}`;
  });
}
