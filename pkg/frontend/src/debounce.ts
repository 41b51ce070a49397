/** Trailing-edge debouncer keyed by channel; later calls supersede earlier. */
export class Debouncer<K> {
  private handles = new Map<K, ReturnType<typeof setTimeout>>();

  constructor(readonly delayMs: number) {}

  debounce(key: K, op: () => void): void {
    const pending = this.handles.get(key);
    if (pending !== undefined) clearTimeout(pending);
    this.handles.set(
      key,
      setTimeout(() => {
        this.handles.delete(key);
        op();
      }, this.delayMs),
    );
  }

  /** Run a pending op immediately (used when a drag ends). */
  flush(key: K, op: () => void): void {
    const pending = this.handles.get(key);
    if (pending !== undefined) {
      clearTimeout(pending);
      this.handles.delete(key);
    }
    op();
  }

  cancel(key: K): void {
    const pending = this.handles.get(key);
    if (pending !== undefined) {
      clearTimeout(pending);
      this.handles.delete(key);
    }
  }
}
