/** Browser wiring: URL-fragment seeds, click delegation, re-rendering.
 *
 * Fragment format: #seed=2,3,1&mode=honest|peek&api=http://127.0.0.1:8420&hints=1
 * The seed doubles as the replay/share token.
 */

import { HttpDekApi, MoveKind } from "./api.js";
import { GameController, UiMode } from "./game.js";
import { buildView, renderHtml } from "./view.js";

const DEFAULT_API = "http://127.0.0.1:8420";

interface PageConfig {
  seed: number[];
  mode: UiMode;
  api: string;
  hints: boolean;
}

function parseFragment(fragment: string): PageConfig {
  const params = new URLSearchParams(fragment.replace(/^#/, ""));
  const seedText = params.get("seed") ?? "";
  const seed = seedText
    ? seedText.split(",").map((s) => parseInt(s.trim(), 10))
    : randomSeed(8);
  const mode: UiMode = params.get("mode") === "peek" ? "peek" : "honest";
  return {
    seed,
    mode,
    api: params.get("api") ?? DEFAULT_API,
    hints: params.get("hints") === "1",
  };
}

function randomSeed(n: number): number[] {
  const ranks = Array.from({ length: n }, (_, i) => i + 1);
  for (let i = ranks.length - 1; i > 0; i--) {
    const j = Math.floor(Math.random() * (i + 1));
    [ranks[i], ranks[j]] = [ranks[j]!, ranks[i]!];
  }
  return ranks;
}

function writeFragment(config: PageConfig): void {
  const params = new URLSearchParams();
  params.set("seed", config.seed.join(","));
  params.set("mode", config.mode);
  if (config.api !== DEFAULT_API) params.set("api", config.api);
  if (config.hints) params.set("hints", "1");
  window.location.hash = params.toString();
}

async function boot(): Promise<void> {
  const board = document.getElementById("board");
  if (!board) throw new Error("missing #board element");
  const config = parseFragment(window.location.hash);
  writeFragment(config);

  const controller = new GameController(
    new HttpDekApi(config.api),
    config.seed,
    config.mode,
  );
  controller.hintsEnabled = config.hints;

  const render = () => {
    const view = buildView(controller.current, config.mode, {
      canUndo: controller.canUndo(),
      canRedo: controller.canRedo(),
      hint: controller.hintLabel(),
      banner: controller.banner,
    });
    board.innerHTML = renderHtml(view);
    const meta = document.getElementById("meta");
    if (meta) {
      meta.textContent =
        `seed ${config.seed.join(",")} · ${config.mode} mode · ` +
        `${controller.moveCount} moves`;
    }
  };

  board.addEventListener("click", async (event) => {
    const target = (event.target as HTMLElement).closest<HTMLElement>(
      "[data-move],[data-action],[data-deck]",
    );
    if (!target) return;
    if (target.dataset.action === "undo") {
      controller.undo();
    } else if (target.dataset.action === "redo") {
      controller.redo();
    } else if (target.dataset.move) {
      await controller.submit(target.dataset.move as MoveKind);
    } else if (target.dataset.deck) {
      // Clicking the face-down pile draws to the left by default.
      await controller.submit("TO_LEFT");
    }
    render();
  });

  const hintsBox = document.getElementById("hints") as HTMLInputElement | null;
  if (hintsBox) {
    hintsBox.checked = config.hints;
    hintsBox.addEventListener("change", async () => {
      config.hints = hintsBox.checked;
      writeFragment(config);
      await controller.toggleHints(hintsBox.checked);
      render();
    });
  }

  const newGame = document.getElementById("new-game");
  if (newGame) {
    newGame.addEventListener("click", () => {
      config.seed = randomSeed(config.seed.length || 8);
      writeFragment(config);
      window.location.reload();
    });
  }

  await controller.start();
  await controller.toggleHints(config.hints);
  render();
}

boot().catch((err) => {
  const board = document.getElementById("board");
  if (board) {
    board.innerHTML = `<div class="banner error">${String(err)}</div>`;
  }
});
