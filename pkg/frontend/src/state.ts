import type { SearchResponse } from "./types.js";

export type PanelId = "analysis" | "expansions" | "queries" | "results" | "timings";

export interface ViewState {
  query: string;
  response: SearchResponse | null;
  panels: Record<PanelId, boolean>;
  selectedResult: number | null; // final rank of the result whose breakdown is open
  error: string | null;
  validation: string | null;
  pending: boolean;
}

export function initialState(): ViewState {
  return {
    query: "",
    response: null,
    panels: { analysis: true, expansions: true, queries: true, results: true, timings: false },
    selectedResult: null,
    error: null,
    validation: null,
    pending: false,
  };
}

export function withPending(state: ViewState, query: string): ViewState {
  return { ...state, query, pending: true, validation: null };
}

export function withResponse(state: ViewState, response: SearchResponse): ViewState {
  return { ...state, response, error: null, validation: null, pending: false, selectedResult: null };
}

// A failed request keeps the previous response on screen.
export function withError(state: ViewState, message: string): ViewState {
  return { ...state, error: message, pending: false };
}

export function withValidation(state: ViewState, message: string): ViewState {
  return { ...state, validation: message, pending: false };
}

export function togglePanel(state: ViewState, panel: PanelId): ViewState {
  return { ...state, panels: { ...state.panels, [panel]: !state.panels[panel] } };
}

export function selectResult(state: ViewState, rank: number | null): ViewState {
  return { ...state, selectedResult: state.selectedResult === rank ? null : rank };
}
