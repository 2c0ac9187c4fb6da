/** Client-side force-directed layout; the engine has no notion of
 * coordinates.  Pinned nodes keep their stored position.
 */
import {
  forceCenter, forceCollide, forceLink, forceManyBody, forceSimulation,
} from "d3-force";
import type { SimulationLinkDatum, SimulationNodeDatum } from "d3-force";
import type { PinnedPositions } from "./store.js";

export interface Point {
  x: number;
  y: number;
}

interface LayoutNode extends SimulationNodeDatum {
  id: string;
}

export function computeLayout(
  argumentIds: readonly string[],
  attacks: readonly [string, string][],
  pinned: PinnedPositions = {},
  width = 640,
  height = 420,
): Record<string, Point> {
  const nodes: LayoutNode[] = argumentIds.map((id) => {
    const pin = pinned[id];
    return pin ? { id, x: pin.x, y: pin.y, fx: pin.x, fy: pin.y } : { id };
  });
  const links: SimulationLinkDatum<LayoutNode>[] = attacks
    .filter(([from, to]) => argumentIds.includes(from) && argumentIds.includes(to))
    .map(([from, to]) => ({ source: from, target: to }));

  const simulation = forceSimulation(nodes)
    .force("charge", forceManyBody().strength(-220))
    .force("link", forceLink<LayoutNode, SimulationLinkDatum<LayoutNode>>(links)
      .id((n) => n.id).distance(90))
    .force("center", forceCenter(width / 2, height / 2))
    .force("collide", forceCollide(26))
    .stop();
  simulation.tick(250);

  const margin = 28;
  const result: Record<string, Point> = {};
  for (const node of nodes) {
    result[node.id] = {
      x: clamp(node.x ?? width / 2, margin, width - margin),
      y: clamp(node.y ?? height / 2, margin, height - margin),
    };
  }
  return result;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, v));
}
