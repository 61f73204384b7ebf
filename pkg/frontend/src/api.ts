import type { SearchResponse } from "./types.js";

export type FetchLike = (input: string) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

/**
 * Monotonic ticket counter: only the most recently started request is
 * "current", so a slow earlier response can be recognized as stale and
 * dropped.
 */
export class LatestWins {
  private seq = 0;

  start(): number {
    return ++this.seq;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}

export async function fetchSearch(
  baseUrl: string,
  query: string,
  fetchImpl: FetchLike,
): Promise<SearchResponse> {
  const url = `${baseUrl}/api/search?q=${encodeURIComponent(query)}`;
  const response = await fetchImpl(url);
  if (!response.ok) {
    throw new Error(`search failed with status ${response.status}`);
  }
  return (await response.json()) as SearchResponse;
}
