/**
 * Request discipline for interactive controls.
 *
 * `debounce` collapses a burst of events into one trailing call, so a
 * moving slider issues at most one request per settle. `LatestWins`
 * guards against out-of-order responses: only the newest issued request
 * may deliver its result, stale responses are dropped on the floor.
 */

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs = 250,
): (...args: A) => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) clearTimeout(handle);
    handle = setTimeout(() => {
      handle = undefined;
      fn(...args);
    }, delayMs);
  };
}

export class LatestWins {
  private ticket = 0;

  /** Run an async producer; resolve null if a newer run started meanwhile. */
  async run<T>(producer: () => Promise<T>): Promise<T | null> {
    const mine = ++this.ticket;
    const value = await producer();
    return mine === this.ticket ? value : null;
  }

  /** Invalidate every in-flight run without starting a new one. */
  cancel(): void {
    this.ticket++;
  }
}
