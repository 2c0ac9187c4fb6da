/** Typed client for the dispute service HTTP API.
 *
 * Every response is validated with zod before it reaches the UI, so a
 * drifting server shows up as a loud ApiError instead of NaN badges.
 */
import { z } from "zod";

const argStatus = z.enum(["Objective", "Subjective", "Indefensible"]);
export type ArgStatus = z.infer<typeof argStatus>;

const attack = z.tuple([z.string(), z.string()]);

const frameworkDocument = z.object({
  version: z.number(),
  values: z.array(z.string()),
  arguments: z.array(z.object({
    id: z.string(),
    value: z.string(),
    label: z.string().optional(),
  })),
  attacks: z.array(attack),
  orders: z.array(z.object({
    name: z.string(),
    ranking: z.array(z.string()),
  })).default([]),
});
export type FrameworkDocument = z.infer<typeof frameworkDocument>;

const healthResponse = z.object({
  status: z.string(),
  engineVersion: z.string(),
});

const createResponse = z.object({
  id: z.string(),
  revision: z.number(),
  warnings: z.array(z.string()),
  summary: z.object({
    argumentCount: z.number(),
    attackCount: z.number(),
    values: z.array(z.string()),
  }),
});

const frameworkResponse = z.object({
  id: z.string(),
  revision: z.number(),
  undoDepth: z.number(),
  document: frameworkDocument,
});

const statusResponse = z.object({
  revision: z.number(),
  statuses: z.record(z.string(), argStatus),
  orderCount: z.number(),
  usedScepticalFallback: z.boolean(),
  accepted: z.array(z.object({
    ranking: z.array(z.string()),
    members: z.array(z.string()),
  })),
});
export type StatusReport = z.infer<typeof statusResponse>;

const extensionResponse = z.object({
  revision: z.number(),
  ranking: z.array(z.string()),
  members: z.array(z.string()),
  defeats: z.array(attack),
});
export type ExtensionResult = z.infer<typeof extensionResponse>;

const moveSuggestion = z.object({
  newArgument: z.string(),
  newValue: z.string(),
  attackTarget: z.string(),
  template: z.string(),
});
export type MoveSuggestion = z.infer<typeof moveSuggestion>;

const suggestResponse = z.object({
  revision: z.number(),
  target: z.string(),
  desired: argStatus,
  moves: z.array(moveSuggestion),
});

const applyResponse = z.object({
  revision: z.number(),
  move: moveSuggestion,
  undoDepth: z.number(),
});

const undoResponse = z.object({
  revision: z.number(),
  undoDepth: z.number(),
});

const chainsResponse = z.object({
  revision: z.number(),
  chains: z.array(z.object({
    members: z.array(z.string()),
    value: z.string(),
    parity: z.enum(["even", "odd"]),
  })),
  positions: z.record(z.string(), z.array(z.tuple([z.number(), z.number()]))),
  effectiveParity: z.record(z.string(), z.enum(["even", "odd"])),
  classification: z.object({
    statuses: z.record(z.string(), argStatus),
    rules: z.record(z.string(), z.string()),
  }),
});
export type ChainsReport = z.infer<typeof chainsResponse>;

const fixturesResponse = z.object({
  fixtures: z.array(z.object({
    name: z.string(),
    description: z.string(),
    values: z.array(z.string()),
    argumentCount: z.number(),
    attackCount: z.number(),
  })),
});
export type FixtureIndex = z.infer<typeof fixturesResponse>;

const fixtureDetailResponse = z.object({
  name: z.string(),
  description: z.string(),
  document: frameworkDocument,
  expected: z.record(z.string(), z.unknown()),
});

const errorEnvelope = z.object({
  error: z.object({
    code: z.string(),
    message: z.string(),
    details: z.record(z.string(), z.unknown()).default({}),
  }),
});

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly httpStatus: number,
    readonly details: Record<string, unknown> = {},
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class VafwApi {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError("ConnectionFailed", String(err), 0);
    }
    if (!response.ok) {
      let code = "HttpError";
      let message = `${response.status} ${response.statusText}`;
      let details: Record<string, unknown> = {};
      try {
        const parsed = errorEnvelope.parse(await response.json());
        code = parsed.error.code;
        message = parsed.error.message;
        details = parsed.error.details;
      } catch {
        // not the service envelope; keep the HTTP-level description
      }
      throw new ApiError(code, message, response.status, details);
    }
    return response;
  }

  private async getJson<T>(
    path: string, schema: z.ZodType<T, z.ZodTypeDef, unknown>,
  ): Promise<T> {
    const response = await this.request(path);
    return schema.parse(await response.json());
  }

  private async postJson<T>(
    path: string, body: unknown, schema: z.ZodType<T, z.ZodTypeDef, unknown>,
  ): Promise<T> {
    const response = await this.request(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return schema.parse(await response.json());
  }

  health() {
    return this.getJson("/health", healthResponse);
  }

  listFixtures() {
    return this.getJson("/fixtures", fixturesResponse);
  }

  getFixture(name: string) {
    return this.getJson(`/fixtures/${encodeURIComponent(name)}`, fixtureDetailResponse);
  }

  createFramework(document: unknown) {
    return this.postJson("/frameworks", document, createResponse);
  }

  getFramework(id: string) {
    return this.getJson(`/frameworks/${id}`, frameworkResponse);
  }

  status(id: string) {
    return this.getJson(`/frameworks/${id}/status`, statusResponse);
  }

  extension(id: string, ranking: readonly string[]) {
    const order = encodeURIComponent(ranking.join(","));
    return this.getJson(`/frameworks/${id}/extension?order=${order}`, extensionResponse);
  }

  chains(id: string) {
    return this.getJson(`/frameworks/${id}/chains`, chainsResponse);
  }

  suggest(id: string, target: string, desired: ArgStatus, exhaustive = false) {
    return this.postJson(`/frameworks/${id}/moves/suggest`,
      { target, desired, exhaustive }, suggestResponse);
  }

  apply(id: string, move: {
    newValue: string; attackTarget: string;
    newArgument?: string; template?: string;
  }) {
    return this.postJson(`/frameworks/${id}/moves/apply`, move, applyResponse);
  }

  undo(id: string) {
    return this.postJson(`/frameworks/${id}/undo`, {}, undoResponse);
  }

  async exportText(id: string, format: "dot" | "json"): Promise<string> {
    const response = await this.request(`/frameworks/${id}/export?format=${format}`);
    return response.text();
  }
}
