/** In-process stand-in for the game service, used by the unit tests.
 *
 * Implements the same rules the server enforces (the e2e suite checks
 * the two against each other through the real wire).
 */

import {
  ApiError,
  ApplyResult,
  DekApi,
  Hint,
  HintMode,
  MoveKind,
  ServerState,
} from "../src/api.js";

function won(state: ServerState): boolean {
  return state.pile_next === state.n + 1;
}

export function legalMoves(state: ServerState): MoveKind[] {
  const moves: MoveKind[] = [];
  const k = state.pile_next;
  if (state.deck.length && state.deck[0] === k) moves.push("PLAY_DECK");
  if (state.deque.length && state.deque[0] === k) moves.push("PLAY_LEFT");
  if (state.deque.length && state.deque[state.deque.length - 1] === k) {
    moves.push("PLAY_RIGHT");
  }
  if (state.deck.length) moves.push("TO_LEFT", "TO_RIGHT");
  return moves;
}

export function applyMove(state: ServerState, move: MoveKind): ServerState {
  if (!legalMoves(state).includes(move)) {
    throw new ApiError(`${move} illegal here`, 400);
  }
  const { deck, deque, pile_next, n } = state;
  switch (move) {
    case "PLAY_DECK":
      return { deck: deck.slice(1), deque, pile_next: pile_next + 1, n };
    case "PLAY_LEFT":
      return { deck, deque: deque.slice(1), pile_next: pile_next + 1, n };
    case "PLAY_RIGHT":
      return { deck, deque: deque.slice(0, -1), pile_next: pile_next + 1, n };
    case "TO_LEFT":
      return { deck: deck.slice(1), deque: [deck[0]!, ...deque], pile_next, n };
    case "TO_RIGHT":
      return { deck: deck.slice(1), deque: [...deque, deck[0]!], pile_next, n };
  }
}

function winnable(state: ServerState, failed = new Set<string>()): boolean {
  if (won(state)) return true;
  const key = JSON.stringify([state.deck, state.deque, state.pile_next]);
  if (failed.has(key)) return false;
  for (const move of legalMoves(state)) {
    if (winnable(applyMove(state, move), failed)) return true;
  }
  failed.add(key);
  return false;
}

export class LocalDekApi implements DekApi {
  calls = 0;

  async newGame(shuffle: number[]): Promise<ServerState> {
    this.calls++;
    const sorted = [...shuffle].sort((a, b) => a - b);
    if (!sorted.every((v, i) => v === i + 1)) {
      throw new ApiError("shuffle is not a permutation of 1..n", 400);
    }
    return { deck: [...shuffle], deque: [], pile_next: 1, n: shuffle.length };
  }

  async moves(state: ServerState): Promise<MoveKind[]> {
    this.calls++;
    return legalMoves(state);
  }

  async apply(state: ServerState, move: MoveKind): Promise<ApplyResult> {
    this.calls++;
    const after = applyMove(state, move);
    return { ...after, won: won(after), lost: !won(after) && !legalMoves(after).length };
  }

  async hint(state: ServerState, _mode: HintMode): Promise<Hint> {
    this.calls++;
    const moves = legalMoves(state);
    if (!moves.length) throw new ApiError("no legal moves: the game is lost", 409);
    for (const move of moves) {
      if (winnable(applyMove(state, move))) {
        return { move, value: { num: "1", den: "1" } };
      }
    }
    return { move: moves[0]!, value: { num: "0", den: "1" } };
  }
}

/** An API whose promises are resolved manually, for request-ordering tests. */
export class ManualHintApi extends LocalDekApi {
  pending: ((hint: Hint) => void)[] = [];

  override hint(): Promise<Hint> {
    return new Promise((resolve) => this.pending.push(resolve));
  }

  release(hint: Hint): void {
    const resolve = this.pending.shift();
    if (resolve) resolve(hint);
  }
}
