// Pure view layer: every rendered number and string is copied straight out of
// a SearchResponse field; nothing is recomputed here.

import type { ViewState } from "./state.js";
import type {
  Analysis,
  Expansion,
  RankedResult,
  RefinedQuery,
  SearchResponse,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderBanner(error: string | null, validation: string | null): string {
  if (validation) {
    return `<div class="banner banner-validation">${escapeHtml(validation)}</div>`;
  }
  if (error) {
    return `<div class="banner banner-error">${escapeHtml(error)}</div>`;
  }
  return "";
}

export function renderAnalysis(analysis: Analysis): string {
  const tokens = analysis.tokens
    .map((t) => `<span class="token"><b>${escapeHtml(t.tag)}</b>/${escapeHtml(t.lemma)}</span>`)
    .join(" ");
  const phrases = analysis.noun_phrases.map((p) => `<li>${escapeHtml(p)}</li>`).join("");
  const anchors = analysis.anchor_terms.map(escapeHtml).join(", ") || "(none)";
  const badge = analysis.is_location_query
    ? `<span class="badge badge-location">location query: ${escapeHtml(
        analysis.location_terms.join(" "),
      )}</span>`
    : "";
  return `
    <div class="tokens">${tokens}</div>
    <ul class="phrases">${phrases}</ul>
    <p>anchors: ${anchors} ${badge}</p>`;
}

export function renderExpansionChips(terms: Record<string, Expansion[]>): string {
  const groups = Object.entries(terms).map(([term, expansions]) => {
    const chips = expansions
      .map(
        (e) =>
          `<span class="chip chip-${e.source}" data-lemma="${escapeHtml(e.lemma)}">` +
          `${escapeHtml(e.lemma)}<em>${e.source} ${e.weight.toFixed(2)}</em></span>`,
      )
      .join("");
    return `<div class="chip-row"><span class="chip-term">${escapeHtml(term)}</span>${chips}</div>`;
  });
  return groups.join("");
}

export function renderRefinedQueries(queries: RefinedQuery[]): string {
  const rows = queries
    .map(
      (q) =>
        `<li data-query-id="${q.id}"><code>${escapeHtml(q.terms.join(" "))}</code>` +
        `<span class="prior">${q.prior.toFixed(3)}</span></li>`,
    )
    .join("");
  return `<ol class="queries">${rows}</ol>`;
}

export function renderResults(results: RankedResult[], selectedRank: number | null): string {
  const rows = results.map((r) => {
    const open = r.rank === selectedRank;
    const breakdown = `
      <table class="breakdown">
        <tr><td>rank fusion</td><td>${r.breakdown.rrf.toFixed(3)}</td></tr>
        <tr><td>title coverage</td><td>${r.breakdown.title.toFixed(3)}</td></tr>
        <tr><td>snippet coverage</td><td>${r.breakdown.snippet.toFixed(3)}</td></tr>
        <tr><td>url coverage</td><td>${r.breakdown.url.toFixed(3)}</td></tr>
        <tr><td>phrase bonus</td><td>${r.breakdown.phrase.toFixed(3)}</td></tr>
      </table>`;
    return `
      <li class="result" data-rank="${r.rank}">
        <a href="${escapeHtml(r.url)}" target="_blank" rel="noopener">${escapeHtml(r.title)}</a>
        <button class="score" data-rank="${r.rank}" title="score breakdown">${r.score.toFixed(3)}</button>
        <div class="url">${escapeHtml(r.url)}</div>
        <p class="snippet">${escapeHtml(r.snippet)}</p>
        <div class="popover${open ? " open" : ""}">${open ? breakdown : ""}</div>
      </li>`;
  });
  return `<ol class="results">${rows.join("")}</ol>`;
}

export function renderTimings(timings: Record<string, number>, failed: number[]): string {
  const rows = Object.entries(timings)
    .map(([stage, ms]) => `<tr><td>${escapeHtml(stage)}</td><td>${ms.toFixed(1)}</td></tr>`)
    .join("");
  const failures = failed.length
    ? `<p class="failures">failed refined queries: ${failed.join(", ")}</p>`
    : "";
  return `<table class="timings">${rows}</table>${failures}`;
}

function panel(id: string, title: string, visible: boolean, body: string): string {
  return `
    <section class="panel" id="panel-${id}">
      <h2><button class="panel-toggle" data-panel="${id}">${title} ${visible ? "▾" : "▸"}</button></h2>
      ${visible ? `<div class="panel-body">${body}</div>` : ""}
    </section>`;
}

export function renderApp(state: ViewState): string {
  const banner = renderBanner(state.error, state.validation);
  const pending = state.pending ? `<div class="pending">searching…</div>` : "";
  if (!state.response) {
    return `${banner}${pending}`;
  }
  const response: SearchResponse = state.response;
  return [
    banner,
    pending,
    panel("analysis", "Query analysis", state.panels.analysis, renderAnalysis(response.analysis)),
    panel(
      "expansions",
      "Expansions",
      state.panels.expansions,
      renderExpansionChips(response.expansions.terms),
    ),
    panel(
      "queries",
      `Refined queries (${response.refined_queries.length})`,
      state.panels.queries,
      renderRefinedQueries(response.refined_queries),
    ),
    panel(
      "results",
      `Results (${response.results.length})`,
      state.panels.results,
      renderResults(response.results, state.selectedResult),
    ),
    panel("timings", "Timings", state.panels.timings, renderTimings(response.timings, response.failed_queries)),
  ].join("");
}
