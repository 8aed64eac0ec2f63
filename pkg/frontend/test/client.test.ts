import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { SolveClient, solveUrl } from "../src/client.js";
import { SolveOutcome } from "../src/types.js";

function deferred<T>() {
  let resolve!: (v: T) => void;
  const promise = new Promise<T>((res) => (resolve = res));
  return { promise, resolve };
}

describe("solve client", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("builds the solve url", () => {
    expect(solveUrl([2, 2, 1], 0.5, 0)).toBe(
      "/api/arm/solve?lengths=2%2C2%2C1&qx=0.5&qy=0",
    );
  });

  it("coalesces a burst of requests into the last one", async () => {
    const urls: string[] = [];
    const results: SolveOutcome[] = [];
    const client = new SolveClient({
      fetchJson: async (url) => {
        urls.push(url);
        return { status: 200, body: { components: urls.length } };
      },
      onResult: (o) => results.push(o),
      onError: () => {},
    });
    for (let i = 0; i < 50; i++) {
      client.request([2, 1], 1 + i / 100, 0);
    }
    await vi.advanceTimersByTimeAsync(100);
    expect(urls).toHaveLength(1);
    expect(urls[0]).toContain("qx=1.49");
    expect(results).toHaveLength(1);
  });

  it("drops stale responses when a newer request is in flight", async () => {
    const gates = [deferred<void>(), deferred<void>()];
    let call = 0;
    const rendered: number[] = [];
    const client = new SolveClient({
      fetchJson: async (url) => {
        const mine = call++;
        await gates[mine]!.promise;
        return { status: 200, body: { tag: mine, url } };
      },
      onResult: (o) => rendered.push((o.body as unknown as { tag: number }).tag),
      onError: () => {},
    });
    client.request([2, 1], 1.0, 0);
    await vi.advanceTimersByTimeAsync(31); // first request issued, blocked
    client.request([2, 1], 2.0, 0);
    await vi.advanceTimersByTimeAsync(31); // second issued, blocked
    gates[1]!.resolve(); // newest completes first
    await vi.advanceTimersByTimeAsync(1);
    gates[0]!.resolve(); // stale completes afterwards
    await vi.advanceTimersByTimeAsync(1);
    expect(rendered).toEqual([1]); // only the latest response is rendered
  });

  it("maps 422 to an unreachable outcome", async () => {
    const results: SolveOutcome[] = [];
    const client = new SolveClient({
      fetchJson: async () => ({
        status: 422,
        body: { v: 1, error: "unreachable", z: 9, reach: [3, 7] },
      }),
      onResult: (o) => results.push(o),
      onError: () => {},
    });
    client.request([5, 1, 1], 9, 0);
    await vi.advanceTimersByTimeAsync(50);
    expect(results[0]?.kind).toBe("unreachable");
  });

  it("routes network failures to the error handler, keeping state", async () => {
    const errors: string[] = [];
    const client = new SolveClient({
      fetchJson: async () => {
        throw new Error("boom");
      },
      onResult: () => {
        throw new Error("should not render");
      },
      onError: (m) => errors.push(m),
    });
    client.request([2, 1], 1, 0);
    await vi.advanceTimersByTimeAsync(50);
    expect(errors).toHaveLength(1);
    expect(errors[0]).toContain("boom");
  });
});
