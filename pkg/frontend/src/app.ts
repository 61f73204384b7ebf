// Browser entry point: wires the controller to the DOM. All markup comes from
// render.ts; this file only routes events.

import { SearchController } from "./controller.js";
import { renderApp } from "./render.js";
import type { PanelId } from "./state.js";

const root = document.getElementById("app") as HTMLElement;
const form = document.getElementById("search-form") as HTMLFormElement;
const input = document.getElementById("search-input") as HTMLInputElement;

const controller = new SearchController(
  "",
  (url) => fetch(url),
  (state) => {
    root.innerHTML = renderApp(state);
  },
);

form.addEventListener("submit", (event) => {
  event.preventDefault();
  void controller.submit(input.value);
});

root.addEventListener("click", (event) => {
  const target = event.target as HTMLElement;
  const toggle = target.closest(".panel-toggle") as HTMLElement | null;
  if (toggle?.dataset.panel) {
    controller.toggle(toggle.dataset.panel as PanelId);
    return;
  }
  const score = target.closest(".score") as HTMLElement | null;
  if (score?.dataset.rank) {
    controller.select(Number(score.dataset.rank));
  }
});
