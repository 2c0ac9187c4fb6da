import { describe, expect, it } from "vitest";

import { ApiError } from "../src/api.js";
import type { ArgStatus, FrameworkDocument, VafwApi } from "../src/api.js";
import { Controller } from "../src/controller.js";
import { Store } from "../src/store.js";

function makeDoc(withOrders: boolean): FrameworkDocument {
  return {
    version: 1,
    values: ["life", "property"],
    arguments: [
      { id: "a", value: "property" },
      { id: "b", value: "life" },
      { id: "e", value: "life" },
    ],
    attacks: [["a", "b"]],
    orders: withOrders
      ? [{ name: "life-first", ranking: ["life", "property"] }] : [],
  };
}

interface FakeApi {
  calls: string[];
  suggestFails: boolean;
  api: VafwApi;
}

function fakeApi(withOrders: boolean): FakeApi {
  const doc = makeDoc(withOrders);
  const statuses: Record<string, ArgStatus> = {
    a: "Indefensible", b: "Objective", e: "Subjective",
  };
  const state = { calls: [] as string[], suggestFails: false };
  const impl = {
    getFixture: async (name: string) => {
      state.calls.push(`getFixture ${name}`);
      return { name, description: "", document: doc, expected: {} };
    },
    createFramework: async () => {
      state.calls.push("createFramework");
      return {
        id: "f1", revision: 0, warnings: ["w1"],
        summary: { argumentCount: 3, attackCount: 1, values: doc.values },
      };
    },
    getFramework: async (id: string) => {
      state.calls.push(`getFramework ${id}`);
      return { id, revision: 0, undoDepth: 0, document: doc };
    },
    extension: async (_id: string, ranking: readonly string[]) => {
      state.calls.push(`extension ${ranking.join(">")}`);
      return {
        revision: 0, ranking: [...ranking], members: ["b", "e"], defeats: [],
      };
    },
    status: async () => {
      state.calls.push("status");
      return {
        revision: 0, statuses, orderCount: 2,
        usedScepticalFallback: false, accepted: [],
      };
    },
    suggest: async (_id: string, target: string, desired: ArgStatus) => {
      state.calls.push(`suggest ${target} ${desired}`);
      if (state.suggestFails) {
        throw new ApiError("StatusAlreadyDesired", "already there", 422);
      }
      return {
        revision: 0, target, desired,
        moves: [{ newArgument: "n1", newValue: "property",
                  attackTarget: "b", template: "t" }],
      };
    },
    apply: async () => {
      state.calls.push("apply");
      return {
        revision: 1, undoDepth: 1,
        move: { newArgument: "n1", newValue: "property",
                attackTarget: "b", template: "t" },
      };
    },
    undo: async () => {
      state.calls.push("undo");
      return { revision: 2, undoDepth: 0 };
    },
  };
  return {
    get calls() { return state.calls; },
    set suggestFails(v: boolean) { state.suggestFails = v; },
    get suggestFails() { return state.suggestFails; },
    api: impl as unknown as VafwApi,
  };
}

async function loaded(withOrders = true) {
  const fake = fakeApi(withOrders);
  const store = new Store();
  const controller = new Controller(fake.api, store);
  await controller.loadFixture("hal-carla");
  return { fake, store, controller };
}

describe("loadFixture", () => {
  it("seeds the ranking from the first declared order", async () => {
    const { store } = await loaded(true);
    expect(store.getState().ranking).toEqual(["life", "property"]);
    expect(store.getState().warnings).toEqual(["w1"]);
    expect(store.getState().extension).toEqual(["b", "e"]);
    expect(store.getState().statuses.b).toBe("Objective");
  });

  it("falls back to sorted values when no order is declared", async () => {
    const { store } = await loaded(false);
    expect(store.getState().ranking).toEqual(["life", "property"]);
  });
});

describe("moveValue", () => {
  it("reorders locally then asks the server for the new position", async () => {
    const { fake, store, controller } = await loaded();
    await controller.moveValue("property", "life");
    expect(store.getState().ranking).toEqual(["property", "life"]);
    expect(fake.calls).toContain("extension property>life");
  });
});

describe("requestSuggestions", () => {
  it("requires a selected argument", async () => {
    const { controller } = await loaded();
    await expect(controller.requestSuggestions())
      .rejects.toThrow("select an argument first");
  });

  it("stores the moves for the selected target", async () => {
    const { store, controller } = await loaded();
    controller.selectArgument("e");
    await controller.requestSuggestions();
    expect(store.getState().suggestions).toHaveLength(1);
    expect(store.getState().suggestionsFor)
      .toEqual({ target: "e", desired: "Objective" });
  });
});

describe("mutations", () => {
  it("refuses to start a second move while one is in flight", async () => {
    const { store, controller } = await loaded();
    store.setBusy(true);
    await expect(controller.undo()).rejects.toThrow("still in flight");
    store.setBusy(false);
  });

  it("clears suggestions once the goal status is reached", async () => {
    const { fake, store, controller } = await loaded();
    controller.selectArgument("e");
    await controller.requestSuggestions();
    fake.suggestFails = true;
    await controller.applySuggestion(store.getState().suggestions[0]);
    const state = store.getState();
    expect(state.suggestions).toHaveLength(0);
    expect(state.suggestionsFor).toBeNull();
    expect(state.suggestionsEmpty).toBe(false);
    expect(state.error).toBeNull();
    expect(fake.calls).toContain("apply");
  });

  it("surfaces other API failures in the error banner", async () => {
    const { fake, store, controller } = await loaded();
    (fake.api as unknown as { undo: () => Promise<never> }).undo = () => {
      return Promise.reject(new ApiError("UnknownSession", "gone", 404));
    };
    await expect(controller.undo()).rejects.toThrow("gone");
    expect(store.getState().error).toBe("UnknownSession: gone");
    expect(store.getState().busy).toBe(false);
  });
});
