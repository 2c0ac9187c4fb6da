import { describe, expect, it } from "vitest";

import { ApiError, VafwApi } from "../src/api.js";
import type { FetchLike } from "../src/api.js";

interface Seen {
  url: string;
  init?: RequestInit;
}

function fakeFetch(status: number, body: unknown): { seen: Seen[]; fn: FetchLike } {
  const seen: Seen[] = [];
  const fn: FetchLike = (url, init) => {
    seen.push({ url, init });
    return Promise.resolve(new Response(JSON.stringify(body), {
      status,
      headers: { "content-type": "application/json" },
    }));
  };
  return { seen, fn };
}

describe("request construction", () => {
  it("encodes the ranking into the extension query", async () => {
    const { seen, fn } = fakeFetch(200, {
      revision: 1,
      ranking: ["life", "property"],
      members: ["b"],
      defeats: [],
    });
    const api = new VafwApi("http://host:9", fn);
    const result = await api.extension("f1", ["life", "property"]);
    expect(seen[0].url).toBe("http://host:9/frameworks/f1/extension?order=life%2Cproperty");
    expect(result.members).toEqual(["b"]);
  });

  it("posts suggestion queries as JSON with the exhaustive flag", async () => {
    const { seen, fn } = fakeFetch(200, {
      revision: 1, target: "e", desired: "Objective", moves: [],
    });
    const api = new VafwApi("http://host:9", fn);
    await api.suggest("f1", "e", "Objective");
    expect(seen[0].url).toBe("http://host:9/frameworks/f1/moves/suggest");
    expect(seen[0].init?.method).toBe("POST");
    const headers = seen[0].init?.headers as Record<string, string>;
    expect(headers["content-type"]).toBe("application/json");
    expect(JSON.parse(String(seen[0].init?.body))).toEqual({
      target: "e", desired: "Objective", exhaustive: false,
    });
  });

  it("sends undo as an empty POST body", async () => {
    const { seen, fn } = fakeFetch(200, { revision: 2, undoDepth: 0 });
    const api = new VafwApi("http://host:9", fn);
    const result = await api.undo("f1");
    expect(seen[0].url).toBe("http://host:9/frameworks/f1/undo");
    expect(result.undoDepth).toBe(0);
  });
});

describe("error handling", () => {
  it("decodes the service error envelope", async () => {
    const { fn } = fakeFetch(404, {
      error: { code: "UnknownSession", message: "no framework f9", details: {} },
    });
    const api = new VafwApi("http://host:9", fn);
    const err = await api.status("f9").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).code).toBe("UnknownSession");
    expect((err as ApiError).httpStatus).toBe(404);
    expect((err as ApiError).message).toBe("no framework f9");
  });

  it("falls back to the HTTP status for foreign error bodies", async () => {
    const { fn } = fakeFetch(502, { oops: true });
    const api = new VafwApi("http://host:9", fn);
    const err = await api.health().catch((e: unknown) => e);
    expect((err as ApiError).code).toBe("HttpError");
    expect((err as ApiError).httpStatus).toBe(502);
  });

  it("wraps network failures as ConnectionFailed", async () => {
    const api = new VafwApi("http://host:9", () => {
      return Promise.reject(new Error("ECONNREFUSED"));
    });
    const err = await api.health().catch((e: unknown) => e);
    expect((err as ApiError).code).toBe("ConnectionFailed");
    expect((err as ApiError).httpStatus).toBe(0);
  });

  it("rejects well-formed responses with the wrong shape", async () => {
    const { fn } = fakeFetch(200, { status: "ok" });
    const api = new VafwApi("http://host:9", fn);
    await expect(api.health()).rejects.toThrow();
  });
});
