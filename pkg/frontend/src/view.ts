/** Pure view layer: snapshot -> render model -> HTML string.
 *
 * Honest mode must not leak the face-down deck: the render model for it
 * carries only a count, so nothing downstream can paint hidden ranks.
 * Keeping renderHtml a pure function of the model makes "re-renders to
 * the exact earlier view" directly assertable in tests.
 */

import { MoveKind } from "./api.js";
import { GameStatus, Snapshot, UiMode } from "./game.js";

export interface BoardView {
  mode: UiMode;
  deckCount: number;
  /** Top-first; only present in peek mode. */
  deckRanks: number[] | null;
  deque: number[];
  pileTop: number | null;
  needed: number | null;
  legalMoves: MoveKind[];
  status: GameStatus;
  canUndo: boolean;
  canRedo: boolean;
  hint: string | null;
  banner: string | null;
}

export interface ViewExtras {
  canUndo: boolean;
  canRedo: boolean;
  hint: string | null;
  banner: string | null;
}

export function buildView(
  snapshot: Snapshot,
  mode: UiMode,
  extras: ViewExtras,
): BoardView {
  const { state, legalMoves, status } = snapshot;
  return {
    mode,
    deckCount: state.deck.length,
    deckRanks: mode === "peek" ? [...state.deck] : null,
    deque: [...state.deque],
    pileTop: state.pile_next > 1 ? state.pile_next - 1 : null,
    needed: status === "won" ? null : state.pile_next,
    legalMoves: [...legalMoves],
    status,
    canUndo: extras.canUndo,
    canRedo: extras.canRedo,
    hint: extras.hint,
    banner: extras.banner,
  };
}

const RANK_NAMES = ["", "A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K"];

export function rankLabel(rank: number): string {
  return RANK_NAMES[rank] ?? String(rank);
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function card(rank: number, extraClass = "", move?: MoveKind): string {
  const action = move ? ` data-move="${move}"` : "";
  const cls = `card${extraClass ? " " + extraClass : ""}`;
  return `<span class="${cls}"${action}>${esc(rankLabel(rank))}♥</span>`;
}

/** Render the whole board; every clickable target carries data-move. */
export function renderHtml(view: BoardView): string {
  const parts: string[] = [];

  if (view.banner) {
    parts.push(`<div class="banner error">${esc(view.banner)}</div>`);
  }
  if (view.status === "won") {
    parts.push(`<div class="banner won">You won! 🎉</div>`);
  } else if (view.status === "lost") {
    parts.push(`<div class="banner lost">No legal moves — game lost.</div>`);
  }

  const legal = new Set(view.legalMoves);

  // Deck: face down.  Peek mode lists the ranks; honest mode only the count.
  const deckBits: string[] = [];
  if (view.deckCount === 0) {
    deckBits.push(`<span class="card empty">—</span>`);
  } else {
    const drawable = legal.has("TO_LEFT") || legal.has("PLAY_DECK");
    deckBits.push(
      `<span class="card back${drawable ? " actionable" : ""}" data-deck="top"></span>`,
    );
    deckBits.push(`<span class="count">×${view.deckCount}</span>`);
    if (view.deckRanks) {
      deckBits.push(
        `<span class="peek">${view.deckRanks.map((r) => esc(rankLabel(r))).join(" ")}</span>`,
      );
    }
  }
  parts.push(`<section class="deck" data-count="${view.deckCount}">
    <h2>Deck</h2>${deckBits.join("")}
    <div class="deck-actions">
      ${deckButton("PLAY_DECK", "Play to pile", legal)}
      ${deckButton("TO_LEFT", "Place left", legal)}
      ${deckButton("TO_RIGHT", "Place right", legal)}
    </div>
  </section>`);

  // Deque: face up, both ends actionable.
  const row = view.deque.map((rank, idx) => {
    if (idx === 0 && legal.has("PLAY_LEFT")) {
      return card(rank, "actionable end-left", "PLAY_LEFT");
    }
    if (idx === view.deque.length - 1 && legal.has("PLAY_RIGHT")) {
      return card(rank, "actionable end-right", "PLAY_RIGHT");
    }
    return card(rank);
  });
  parts.push(`<section class="deque">
    <h2>Deque</h2>${row.join("") || `<span class="card empty">—</span>`}
  </section>`);

  // Pile: the top card and what is needed next.
  const pile =
    view.pileTop === null
      ? `<span class="card empty">—</span>`
      : card(view.pileTop, "pile-top");
  const needed =
    view.needed === null
      ? ""
      : `<span class="needed">needs ${esc(rankLabel(view.needed))}</span>`;
  parts.push(`<section class="pile"><h2>Pile</h2>${pile}${needed}</section>`);

  const controls: string[] = [];
  controls.push(
    `<button data-action="undo"${view.canUndo ? "" : " disabled"}>Undo</button>`,
  );
  controls.push(
    `<button data-action="redo"${view.canRedo ? "" : " disabled"}>Redo</button>`,
  );
  if (view.hint) {
    controls.push(`<span class="hint">hint: ${esc(view.hint)}</span>`);
  }
  parts.push(`<section class="controls">${controls.join("")}</section>`);

  return parts.join("\n");
}

function deckButton(move: MoveKind, label: string, legal: Set<MoveKind>): string {
  return `<button data-move="${move}"${legal.has(move) ? "" : " disabled"}>${label}</button>`;
}
