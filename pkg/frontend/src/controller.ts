/** Workflows the DOM handlers call.  All semantics come from the service;
 * the controller only sequences requests and feeds payloads to the store.
 */
import { ApiError, VafwApi } from "./api.js";
import type { ArgStatus, MoveSuggestion } from "./api.js";
import { Store, reorderedRanking } from "./store.js";

export class Controller {
  constructor(readonly api: VafwApi, readonly store: Store) {}

  async loadFixture(name: string): Promise<void> {
    await this.guarded(async () => {
      const detail = await this.api.getFixture(name);
      const created = await this.api.createFramework(detail.document);
      const info = await this.api.getFramework(created.id);
      this.store.startSession(info.id, info.document, info.revision,
                              info.undoDepth, created.warnings);
      const first = info.document.orders[0];
      const ranking = first ? first.ranking : [...info.document.values].sort();
      await this.refreshForRanking(ranking);
      await this.refreshStatus();
    });
  }

  async loadDocument(document: unknown): Promise<void> {
    await this.guarded(async () => {
      const created = await this.api.createFramework(document);
      const info = await this.api.getFramework(created.id);
      this.store.startSession(info.id, info.document, info.revision,
                              info.undoDepth, created.warnings);
      const first = info.document.orders[0];
      const ranking = first ? first.ranking : [...info.document.values].sort();
      await this.refreshForRanking(ranking);
      await this.refreshStatus();
    });
  }

  /** Drag handler entry point: one reorder, one extension query. */
  async moveValue(movedValue: string, beforeValue: string | null): Promise<void> {
    const ranking = reorderedRanking(this.store.getState().ranking,
                                     movedValue, beforeValue);
    await this.setRanking(ranking);
  }

  async setRanking(ranking: readonly string[]): Promise<void> {
    await this.guarded(() => this.refreshForRanking(ranking));
  }

  selectArgument(id: string | null): void {
    this.store.selectArgument(id);
  }

  setDesired(desired: ArgStatus): void {
    this.store.setDesired(desired);
  }

  async requestSuggestions(exhaustive = false): Promise<void> {
    const { sessionId, selected, desired } = this.store.getState();
    if (sessionId === null || selected === null) {
      throw new Error("select an argument first");
    }
    await this.guarded(async () => {
      const result = await this.api.suggest(sessionId, selected, desired,
                                            exhaustive);
      this.store.applySuggestions(result.target, result.desired, result.moves);
    });
  }

  async applySuggestion(move: MoveSuggestion): Promise<void> {
    await this.mutate(async (sessionId) => {
      await this.api.apply(sessionId, move);
    });
  }

  async applyManualMove(newValue: string, attackTarget: string): Promise<void> {
    await this.mutate(async (sessionId) => {
      await this.api.apply(sessionId, { newValue, attackTarget });
    });
  }

  async undo(): Promise<void> {
    await this.mutate(async (sessionId) => {
      await this.api.undo(sessionId);
    });
  }

  pinNode(id: string, x: number, y: number): void {
    this.store.pin(id, x, y);
  }

  unpinNode(id: string): void {
    this.store.unpin(id);
  }

  private sessionOrThrow(): string {
    const { sessionId } = this.store.getState();
    if (sessionId === null) {
      throw new Error("no session loaded");
    }
    return sessionId;
  }

  private async refreshForRanking(ranking: readonly string[]): Promise<void> {
    const sessionId = this.sessionOrThrow();
    this.store.setRanking(ranking);
    this.store.applyExtension(await this.api.extension(sessionId, ranking));
  }

  private async refreshStatus(): Promise<void> {
    this.store.applyStatus(await this.api.status(this.sessionOrThrow()));
  }

  private async refreshAll(): Promise<void> {
    const sessionId = this.sessionOrThrow();
    const info = await this.api.getFramework(sessionId);
    this.store.applyDocument(info.document, info.revision, info.undoDepth);
    await this.refreshForRanking(this.store.getState().ranking);
    await this.refreshStatus();
    const { suggestionsFor } = this.store.getState();
    if (suggestionsFor !== null) {
      try {
        const again = await this.api.suggest(sessionId, suggestionsFor.target,
                                             suggestionsFor.desired);
        this.store.applySuggestions(again.target, again.desired, again.moves);
      } catch (err) {
        // the move just reached the goal (or left the two-value domain):
        // stale suggestions disappear instead of surfacing an error
        if (err instanceof ApiError &&
            (err.code === "StatusAlreadyDesired" || err.code === "NotDichromatic")) {
          this.store.clearSuggestions();
        } else {
          throw err;
        }
      }
    }
  }

  /** Mutations are serialized: at most one in flight. */
  private async mutate(action: (sessionId: string) => Promise<void>): Promise<void> {
    if (this.store.getState().busy) {
      throw new Error("another move is still in flight");
    }
    const sessionId = this.sessionOrThrow();
    this.store.setBusy(true);
    try {
      await action(sessionId);
      await this.refreshAll();
      this.store.setError(null);
    } catch (err) {
      this.store.setError(describe(err));
      throw err;
    } finally {
      this.store.setBusy(false);
    }
  }

  /** Queries surface failures in the error banner without clearing state. */
  private async guarded(action: () => Promise<void>): Promise<void> {
    try {
      await action();
      this.store.setError(null);
    } catch (err) {
      this.store.setError(describe(err));
      throw err;
    }
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return `${err.code}: ${err.message}`;
  }
  return String(err instanceof Error ? err.message : err);
}
