"""Stateless JSON service for playing the deque solitaire over HTTP.

Every request carries the full game state; the server holds no sessions
and revalidates everything it receives, so identical requests always
get identical responses and clients can implement undo locally.

Endpoints (all POST bodies and responses are JSON):

* ``POST /game/new``   {"shuffle": [...], "variant": "full"|"visible"}
* ``POST /game/moves`` {"state": {...}}            -> {"moves": [{"move": ...}, ...]}
* ``POST /game/apply`` {"state": {...}, "move": ...} -> new state
* ``POST /game/hint``  {"state": {...}, "mode": "clairvoyant"|"policy"}
* ``GET  /health``

State wire format: {"deck": [...], "deque": [...], "pile_next": k, "n": n},
deck top-first, deque left-to-right.  The "visible" variant of /game/new
replaces "deck" by "deck_size" so an honest client can render without
ever holding the hidden order in its display path; /game/moves, /game/apply
and /game/hint need the full variant (the server cannot validate or
search a state whose deck it cannot see).  Exact values are serialized
as {"num": "...", "den": "..."} strings so arbitrary precision survives
JSON.  Malformed or invariant-violating payloads get 400 with the
violation named; a hint on a lost position gets 409.
"""
from __future__ import annotations

import json
import logging
from fractions import Fraction
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import dek, perms

log = logging.getLogger(__name__)

MAX_BODY = 1 << 20


class RequestError(ValueError):
    """A client error; `status` is the HTTP code to return."""

    def __init__(self, message: str, status: int = HTTPStatus.BAD_REQUEST):
        super().__init__(message)
        self.status = status


def state_to_json(s: dek.DekState, variant: str = "full") -> dict:
    out = {
        "deque": list(s.deque),
        "pile_next": s.next_needed,
        "n": s.n,
    }
    if variant == "visible":
        out["deck_size"] = len(s.deck)
        out["variant"] = "visible"
    else:
        out["deck"] = list(s.deck)
    return out


def _int_list(obj, name: str) -> tuple[int, ...]:
    if not isinstance(obj, list):
        raise RequestError(f"{name} must be a list of ranks")
    for v in obj:
        if isinstance(v, bool) or not isinstance(v, int):
            raise RequestError(f"{name} rank {v!r} is not an integer")
    return tuple(obj)


def state_from_json(obj) -> dek.DekState:
    if not isinstance(obj, dict):
        raise RequestError("state must be a JSON object")
    if "deck" not in obj:
        raise RequestError("state is missing 'deck' (the full variant is required)")
    for key in ("deque", "pile_next", "n"):
        if key not in obj:
            raise RequestError(f"state is missing {key!r}")
    if isinstance(obj["pile_next"], bool) or not isinstance(obj["pile_next"], int):
        raise RequestError("pile_next must be an integer")
    if isinstance(obj["n"], bool) or not isinstance(obj["n"], int):
        raise RequestError("n must be an integer")
    state = dek.DekState(
        deck=_int_list(obj["deck"], "deck"),
        deque=_int_list(obj["deque"], "deque"),
        next_needed=obj["pile_next"],
        n=obj["n"],
    )
    try:
        return dek.validate_state(state)
    except dek.DekError as exc:
        raise RequestError(str(exc)) from None


def fraction_to_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _move_from(obj) -> str:
    move = obj.get("move") if isinstance(obj, dict) else obj
    if isinstance(move, dict):
        move = move.get("move")
    if not isinstance(move, str) or move not in dek.MOVE_KINDS:
        raise RequestError(f"unknown move {move!r}")
    return move


def handle_new(body: dict) -> dict:
    shuffle = body.get("shuffle")
    if not isinstance(shuffle, list):
        raise RequestError("'shuffle' must be a list of ranks")
    variant = body.get("variant", "full")
    if variant not in ("full", "visible"):
        raise RequestError(f"unknown variant {variant!r}")
    try:
        state = dek.new_game(_int_list(shuffle, "shuffle"))
    except perms.PermutationError as exc:
        raise RequestError(str(exc)) from None
    return state_to_json(state, variant)


def handle_moves(body: dict) -> dict:
    state = state_from_json(body.get("state"))
    if state.won:
        return {"moves": [], "won": True}
    return {"moves": [{"move": m} for m in dek.legal_moves(state)]}


def handle_apply(body: dict) -> dict:
    state = state_from_json(body.get("state"))
    move = _move_from(body.get("move"))
    try:
        after = dek.apply_move(state, move)
    except dek.DekError as exc:
        raise RequestError(str(exc)) from None
    out = state_to_json(after)
    out["won"] = after.won
    if not after.won:
        out["lost"] = dek.is_lost(after)
    return out


def handle_hint(body: dict) -> dict:
    state = state_from_json(body.get("state"))
    mode = body.get("mode", "clairvoyant")
    if mode not in ("clairvoyant", "policy"):
        raise RequestError(f"unknown hint mode {mode!r}")
    try:
        move, value = dek.hint(state, mode)
    except dek.GameLost as exc:
        raise RequestError(str(exc), status=HTTPStatus.CONFLICT) from None
    except (dek.DekError, ValueError) as exc:
        raise RequestError(str(exc)) from None
    return {"move": move, "value": fraction_to_json(value)}


ROUTES = {
    "/game/new": handle_new,
    "/game/moves": handle_moves,
    "/game/apply": handle_apply,
    "/game/hint": handle_hint,
}


class GameRequestHandler(BaseHTTPRequestHandler):
    server_version = "permdek"
    protocol_version = "HTTP/1.1"

    def _send(self, status: int, payload: dict) -> None:
        data = json.dumps(payload).encode()
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def do_GET(self) -> None:  # noqa: N802 (http.server naming)
        if self.path == "/health":
            self._send(HTTPStatus.OK, {"ok": True})
        else:
            self._send(HTTPStatus.NOT_FOUND, {"error": "unknown endpoint"})

    def do_OPTIONS(self) -> None:  # noqa: N802
        self.send_response(HTTPStatus.NO_CONTENT)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_POST(self) -> None:  # noqa: N802
        handler = ROUTES.get(self.path)
        if handler is None:
            self._send(HTTPStatus.NOT_FOUND, {"error": "unknown endpoint"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            if length > MAX_BODY:
                raise RequestError("request body too large")
            raw = self.rfile.read(length)
            try:
                body = json.loads(raw.decode("utf-8")) if raw else {}
            except (json.JSONDecodeError, UnicodeDecodeError):
                raise RequestError("malformed JSON body") from None
            if not isinstance(body, dict):
                raise RequestError("request body must be a JSON object")
            self._send(HTTPStatus.OK, handler(body))
        except RequestError as exc:
            self._send(exc.status, {"error": str(exc)})
        except Exception as exc:  # defense: a bad payload must never crash us
            log.debug("request handler error", exc_info=True)
            self._send(HTTPStatus.BAD_REQUEST, {"error": f"bad request: {exc}"})

    def log_message(self, fmt: str, *args) -> None:
        log.info("%s %s", self.address_string(), fmt % args)


def make_server(port: int, bind: str = "127.0.0.1") -> ThreadingHTTPServer:
    return ThreadingHTTPServer((bind, port), GameRequestHandler)


def serve_http(port: int, bind: str = "127.0.0.1") -> None:
    """Run the service until interrupted."""
    server = make_server(port, bind)
    host, actual_port = server.server_address[:2]
    log.warning("serving on http://%s:%s", host, actual_port)
    print(f"serving on http://{host}:{actual_port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
