import { describe, expect, it } from "vitest";

import { computeLayout } from "../src/layout.js";

const ids = ["a", "b", "c", "d", "e", "f"];
const attacks: [string, string][] = [
  ["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "f"], ["f", "a"],
];

describe("computeLayout", () => {
  it("places every node inside the viewport", () => {
    const layout = computeLayout(ids, attacks, {}, 640, 420);
    expect(Object.keys(layout).sort()).toEqual([...ids].sort());
    for (const id of ids) {
      const point = layout[id];
      expect(Number.isFinite(point.x)).toBe(true);
      expect(Number.isFinite(point.y)).toBe(true);
      expect(point.x).toBeGreaterThanOrEqual(28);
      expect(point.x).toBeLessThanOrEqual(640 - 28);
      expect(point.y).toBeGreaterThanOrEqual(28);
      expect(point.y).toBeLessThanOrEqual(420 - 28);
    }
  });

  it("keeps pinned nodes where the user left them", () => {
    const layout = computeLayout(ids, attacks, { a: { x: 100, y: 120 } });
    expect(layout.a).toEqual({ x: 100, y: 120 });
  });

  it("spreads distinct nodes apart", () => {
    const layout = computeLayout(ids, attacks);
    const seen = new Set(Object.values(layout).map((p) =>
      `${Math.round(p.x)},${Math.round(p.y)}`));
    expect(seen.size).toBe(ids.length);
  });

  it("ignores attacks that mention unknown arguments", () => {
    const layout = computeLayout(["a"], [["a", "ghost"]]);
    expect(Object.keys(layout)).toEqual(["a"]);
  });
});
