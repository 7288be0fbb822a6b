/** Typed client for the stateless permdek game service. */

export interface ServerState {
  deck: number[];
  deque: number[];
  pile_next: number;
  n: number;
}

export type MoveKind =
  | "PLAY_DECK"
  | "PLAY_LEFT"
  | "PLAY_RIGHT"
  | "TO_LEFT"
  | "TO_RIGHT";

export const MOVE_KINDS: MoveKind[] = [
  "PLAY_DECK",
  "PLAY_LEFT",
  "PLAY_RIGHT",
  "TO_LEFT",
  "TO_RIGHT",
];

export type HintMode = "clairvoyant" | "policy";

export interface ExactValue {
  num: string;
  den: string;
}

export interface Hint {
  move: MoveKind;
  value: ExactValue;
}

export interface ApplyResult extends ServerState {
  won?: boolean;
  lost?: boolean;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
    this.name = "ApiError";
  }
}

/** The server is authoritative; this client only shuttles JSON. */
export interface DekApi {
  newGame(shuffle: number[]): Promise<ServerState>;
  moves(state: ServerState): Promise<MoveKind[]>;
  apply(state: ServerState, move: MoveKind): Promise<ApplyResult>;
  hint(state: ServerState, mode: HintMode): Promise<Hint>;
}

export class HttpDekApi implements DekApi {
  constructor(readonly baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
      });
    } catch (err) {
      throw new ApiError(`service unreachable: ${String(err)}`, 0);
    }
    const payload = (await response.json().catch(() => ({}))) as {
      error?: string;
    };
    if (!response.ok) {
      throw new ApiError(payload.error ?? response.statusText, response.status);
    }
    return payload as T;
  }

  newGame(shuffle: number[]): Promise<ServerState> {
    return this.post<ServerState>("/game/new", { shuffle });
  }

  async moves(state: ServerState): Promise<MoveKind[]> {
    const body = await this.post<{ moves: { move: MoveKind }[] }>(
      "/game/moves",
      { state },
    );
    return (body.moves ?? []).map((m) => m.move);
  }

  apply(state: ServerState, move: MoveKind): Promise<ApplyResult> {
    return this.post<ApplyResult>("/game/apply", { state, move });
  }

  hint(state: ServerState, mode: HintMode): Promise<Hint> {
    return this.post<Hint>("/game/hint", { state, mode });
  }
}

/** "num/den", with the denominator dropped when it is 1. */
export function formatValue(value: ExactValue): string {
  return value.den === "1" ? value.num : `${value.num}/${value.den}`;
}

/** Strip won/lost decorations so a response can be resent as a state. */
export function asState(result: ApplyResult): ServerState {
  return {
    deck: result.deck,
    deque: result.deque,
    pile_next: result.pile_next,
    n: result.n,
  };
}
