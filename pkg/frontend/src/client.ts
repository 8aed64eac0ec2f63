// Debounced solve requests with a latest-wins policy: rapid pointer motion
// issues many requests, only the newest response may reach the UI.

import { SolveOutcome, SolveResponse, UnreachableResponse } from "./types.js";

export type FetchJson = (
  url: string,
) => Promise<{ status: number; body: unknown }>;

export interface SolveClientOptions {
  fetchJson: FetchJson;
  onResult: (outcome: SolveOutcome) => void;
  onError: (message: string) => void;
  debounceMs?: number;
  setTimer?: (fn: () => void, ms: number) => unknown;
  clearTimer?: (handle: unknown) => void;
}

export function solveUrl(lengths: number[], qx: number, qy: number): string {
  const ls = lengths.join(",");
  return `/api/arm/solve?lengths=${encodeURIComponent(ls)}&qx=${qx}&qy=${qy}`;
}

export class SolveClient {
  private seq = 0;
  private pending: unknown = null;
  private readonly opts: Required<SolveClientOptions>;

  constructor(options: SolveClientOptions) {
    this.opts = {
      debounceMs: 30,
      setTimer: (fn, ms) => setTimeout(fn, ms),
      clearTimer: (h) => clearTimeout(h as ReturnType<typeof setTimeout>),
      ...options,
    };
  }

  /** Schedule a solve; calls made within the debounce window coalesce. */
  request(lengths: number[], qx: number, qy: number): void {
    if (this.pending !== null) {
      this.opts.clearTimer(this.pending);
    }
    this.pending = this.opts.setTimer(() => {
      this.pending = null;
      void this.issue(lengths, qx, qy);
    }, this.opts.debounceMs);
  }

  private async issue(lengths: number[], qx: number, qy: number): Promise<void> {
    const mySeq = ++this.seq;
    let status: number;
    let body: unknown;
    try {
      ({ status, body } = await this.opts.fetchJson(solveUrl(lengths, qx, qy)));
    } catch (err) {
      if (mySeq === this.seq) {
        this.opts.onError(`solver unreachable: ${String(err)}`);
      }
      return;
    }
    if (mySeq !== this.seq) {
      return; // a newer request superseded this one
    }
    if (status === 200) {
      this.opts.onResult({ kind: "solved", body: body as SolveResponse });
    } else if (status === 422) {
      this.opts.onResult({
        kind: "unreachable",
        body: body as UnreachableResponse,
      });
    } else {
      const msg = (body as { error?: string })?.error ?? `status ${status}`;
      this.opts.onError(msg);
    }
  }
}
