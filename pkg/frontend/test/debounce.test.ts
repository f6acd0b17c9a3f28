import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { debounce } from '../src/debounce.js';

describe('debounce', () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it('fires once on the trailing edge with the last arguments', () => {
    const spy = vi.fn();
    const d = debounce(spy, 300);
    d(1);
    d(2);
    d(3);
    expect(spy).not.toHaveBeenCalled();
    vi.advanceTimersByTime(300);
    expect(spy).toHaveBeenCalledTimes(1);
    expect(spy).toHaveBeenCalledWith(3);
  });

  it('restarts the window on every call', () => {
    const spy = vi.fn();
    const d = debounce(spy, 300);
    d('a');
    vi.advanceTimersByTime(200);
    d('b');
    vi.advanceTimersByTime(200);
    expect(spy).not.toHaveBeenCalled();
    vi.advanceTimersByTime(100);
    expect(spy).toHaveBeenCalledTimes(1);
    expect(spy).toHaveBeenCalledWith('b');
  });

  it('cancel drops the pending call', () => {
    const spy = vi.fn();
    const d = debounce(spy, 300);
    d('x');
    d.cancel();
    vi.advanceTimersByTime(1000);
    expect(spy).not.toHaveBeenCalled();
  });

  it('flush runs the pending call immediately', () => {
    const spy = vi.fn();
    const d = debounce(spy, 300);
    d('x');
    d.flush();
    expect(spy).toHaveBeenCalledTimes(1);
    expect(spy).toHaveBeenCalledWith('x');
    vi.advanceTimersByTime(1000);
    expect(spy).toHaveBeenCalledTimes(1);
  });

  it('flush with nothing pending is a no-op', () => {
    const spy = vi.fn();
    const d = debounce(spy, 300);
    d.flush();
    expect(spy).not.toHaveBeenCalled();
  });
});
