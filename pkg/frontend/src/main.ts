/** Browser entry point: wires the API client, store, controller, and view. */
import { VafwApi } from "./api.js";
import { Controller } from "./controller.js";
import { Store } from "./store.js";
import { renderApp } from "./view.js";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  if (override) {
    return override;
  }
  return `${window.location.protocol}//${window.location.hostname}:8000`;
}

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app container");
  }
  const api = new VafwApi(apiBase());
  const store = new Store();
  const controller = new Controller(api, store);

  let fixtureNames: string[] = [];
  try {
    const listing = await api.listFixtures();
    fixtureNames = listing.fixtures.map((f) => f.name);
  } catch (err) {
    root.textContent = `cannot reach the engine at ${api.baseUrl}: ${err}`;
    return;
  }
  renderApp(root, store, controller, fixtureNames);
  if (fixtureNames.length > 0) {
    await controller.loadFixture(fixtureNames[0]);
  }
}

void boot();
