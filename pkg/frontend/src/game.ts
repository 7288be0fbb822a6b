/** Game-session state machine: one game per controller, undo kept local.
 *
 * The server is authoritative for rules (the legal-move list gates every
 * submission) but holds no session: this controller carries the full
 * state, so undo and redo replay snapshots without any server call.  At
 * most one request is in flight per controller; responses arriving for a
 * superseded snapshot are discarded via a monotone sequence number.
 */

import {
  ApiError,
  asState,
  DekApi,
  formatValue,
  Hint,
  HintMode,
  MoveKind,
  ServerState,
} from "./api.js";

export type UiMode = "honest" | "peek";
export type GameStatus = "playing" | "won" | "lost";

export interface Snapshot {
  state: ServerState;
  legalMoves: MoveKind[];
  status: GameStatus;
}

export interface HistoryEntry {
  before: Snapshot;
  move: MoveKind;
}

/** Hints follow the UI mode: honest players get the non-peeking policy
 * value, peekers get the clairvoyant verdict. */
export function hintModeFor(mode: UiMode): HintMode {
  return mode === "honest" ? "policy" : "clairvoyant";
}

export class GameController {
  private snapshot: Snapshot | null = null;
  private history: HistoryEntry[] = [];
  private redoStack: HistoryEntry[] = [];
  private seq = 0;

  hint: Hint | null = null;
  banner: string | null = null;
  hintsEnabled = false;

  constructor(
    readonly api: DekApi,
    readonly seed: number[],
    readonly mode: UiMode = "honest",
  ) {}

  get current(): Snapshot {
    if (!this.snapshot) throw new Error("game not started");
    return this.snapshot;
  }

  get moveCount(): number {
    return this.history.length;
  }

  get historyEntries(): readonly HistoryEntry[] {
    return this.history;
  }

  canUndo(): boolean {
    return this.history.length > 0;
  }

  canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  async start(): Promise<void> {
    const token = ++this.seq;
    try {
      const state = await this.api.newGame(this.seed);
      const snapshot = await this.snapshotFor(state);
      if (token !== this.seq) return; // superseded
      this.snapshot = snapshot;
      this.history = [];
      this.redoStack = [];
      this.banner = null;
      this.hint = null;
      await this.refreshHint();
    } catch (err) {
      if (token === this.seq) this.banner = describe(err);
    }
  }

  private async snapshotFor(state: ServerState): Promise<Snapshot> {
    if (state.pile_next === state.n + 1) {
      return { state, legalMoves: [], status: "won" };
    }
    const legalMoves = await this.api.moves(state);
    return { state, legalMoves, status: legalMoves.length ? "playing" : "lost" };
  }

  /** Submit a move the board highlighted.  The legal-move list is
   * authoritative: anything else is refused before it reaches the wire. */
  async submit(move: MoveKind): Promise<void> {
    const before = this.current;
    if (before.status !== "playing" || !before.legalMoves.includes(move)) {
      return;
    }
    const token = ++this.seq;
    try {
      const result = await this.api.apply(before.state, move);
      const after = await this.snapshotFor(asState(result));
      if (token !== this.seq) return;
      this.history.push({ before, move });
      this.redoStack = [];
      this.snapshot = after;
      this.hint = null;
      this.banner = null;
      await this.refreshHint();
    } catch (err) {
      if (token !== this.seq) return;
      if (err instanceof ApiError && err.status >= 400 && err.status < 500) {
        // Stale or rejected: resynchronize from our own history.
        this.snapshot = this.history.length
          ? await this.snapshotFor(before.state)
          : this.snapshot;
        this.banner = `move rejected: ${err.message}`;
      } else {
        this.banner = describe(err);
      }
    }
  }

  /** Local, no server round-trip. */
  undo(): void {
    const entry = this.history.pop();
    if (!entry) return;
    this.seq++; // any in-flight response is now stale
    this.redoStack.push({ before: this.current, move: entry.move });
    this.snapshot = entry.before;
    this.hint = null;
  }

  /** Local inverse of undo. */
  redo(): void {
    const entry = this.redoStack.pop();
    if (!entry) return;
    this.seq++;
    this.history.push({ before: this.current, move: entry.move });
    this.snapshot = entry.before;
    this.hint = null;
  }

  /** The snapshot after replaying the first `length` history moves;
   * length omitted means the full history (the current position). */
  snapshotAt(length?: number): Snapshot {
    const cut = length ?? this.history.length;
    const entry = this.history[cut];
    return entry ? entry.before : this.current;
  }

  /** Re-drive every recorded move through the server and confirm it
   * reproduces the live position (the history-replay invariant). */
  async verifyReplay(): Promise<boolean> {
    if (!this.history.length) return true;
    const first = this.history[0];
    if (!first) return true;
    let state = first.before.state;
    for (const entry of this.history) {
      state = asState(await this.api.apply(state, entry.move));
    }
    return JSON.stringify(state) === JSON.stringify(this.current.state);
  }

  async toggleHints(on: boolean): Promise<void> {
    this.hintsEnabled = on;
    this.hint = null;
    if (on) await this.refreshHint();
  }

  private async refreshHint(): Promise<void> {
    if (!this.hintsEnabled || this.current.status !== "playing") return;
    const token = this.seq;
    try {
      const hint = await this.api.hint(
        this.current.state,
        hintModeFor(this.mode),
      );
      if (token === this.seq) this.hint = hint;
    } catch (err) {
      if (token === this.seq) this.banner = describe(err);
    }
  }

  hintLabel(): string | null {
    if (!this.hint) return null;
    return `${this.hint.move} (${formatValue(this.hint.value)})`;
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError && err.status === 0) return err.message;
  if (err instanceof Error) return err.message;
  return String(err);
}
