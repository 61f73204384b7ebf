// Mirrors the JSON published by GET /api/search (search_response.schema.json).

export interface TokenView {
  text: string;
  lemma: string;
  tag: string;
}

export interface Analysis {
  tokens: TokenView[];
  noun_phrases: string[];
  content_terms: string[];
  anchor_terms: string[];
  is_location_query: boolean;
  location_terms: string[];
}

export interface DomainKeyword {
  keyword: string;
  source: string;
  relation: string;
  weight: number;
}

export type ExpansionSource = "self" | "ontology" | "wordnet";

export interface Expansion {
  lemma: string;
  source: ExpansionSource;
  weight: number;
}

export interface RefinedQuery {
  id: number;
  terms: string[];
  prior: number;
}

export interface ScoreBreakdown {
  rrf: number;
  title: number;
  snippet: number;
  url: number;
  phrase: number;
}

export interface RankedResult {
  rank: number;
  url: string;
  title: string;
  snippet: string;
  score: number;
  breakdown: ScoreBreakdown;
}

export interface SearchResponse {
  query: string;
  analysis: Analysis;
  domain_keywords: DomainKeyword[];
  expansions: { terms: Record<string, Expansion[]> };
  refined_queries: RefinedQuery[];
  results: RankedResult[];
  timings: Record<string, number>;
  failed_queries: number[];
}
