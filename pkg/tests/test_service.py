from __future__ import annotations

import json
import random

import httpx
import pytest


@pytest.fixture()
def client(game_server):
    with httpx.Client(base_url=game_server, timeout=10.0) as c:
        yield c


def new_state(client, shuffle, variant=None):
    body = {"shuffle": shuffle}
    if variant:
        body["variant"] = variant
    r = client.post("/game/new", json=body)
    assert r.status_code == 200
    return r.json()


class TestHealth:
    def test_health(self, client):
        r = client.get("/health")
        assert r.status_code == 200 and r.json() == {"ok": True}

    def test_unknown_endpoint(self, client):
        assert client.get("/nope").status_code == 404
        assert client.post("/game/nope", json={}).status_code == 404


class TestNew:
    def test_full_state(self, client):
        state = new_state(client, [1, 2, 3])
        assert state == {"deck": [1, 2, 3], "deque": [], "pile_next": 1, "n": 3}

    def test_visible_variant_hides_the_deck(self, client):
        state = new_state(client, [2, 3, 1], variant="visible")
        assert "deck" not in state
        assert state["deck_size"] == 3 and state["variant"] == "visible"

    def test_bad_shuffle(self, client):
        r = client.post("/game/new", json={"shuffle": [1, 1]})
        assert r.status_code == 400
        assert "duplicate" in r.json()["error"]

    def test_bad_variant(self, client):
        r = client.post("/game/new", json={"shuffle": [1], "variant": "xray"})
        assert r.status_code == 400


class TestMoves:
    def test_initial_moves(self, client):
        state = new_state(client, [1, 2, 3])
        r = client.post("/game/moves", json={"state": state})
        assert r.status_code == 200
        assert r.json()["moves"] == [
            {"move": "PLAY_DECK"},
            {"move": "TO_LEFT"},
            {"move": "TO_RIGHT"},
        ]

    def test_moves_are_exactly_applyable(self, client):
        rng = random.Random(11)
        state = new_state(client, [3, 1, 4, 2, 5])
        for _ in range(20):
            r = client.post("/game/moves", json={"state": state})
            moves = r.json().get("moves", [])
            if not moves:
                break
            for m in moves:
                ok = client.post("/game/apply", json={"state": state, "move": m})
                assert ok.status_code == 200
            state = client.post(
                "/game/apply", json={"state": state, "move": rng.choice(moves)}
            ).json()
            state.pop("won", None)
            state.pop("lost", None)

    def test_requires_full_state(self, client):
        visible = new_state(client, [1, 2], variant="visible")
        r = client.post("/game/moves", json={"state": visible})
        assert r.status_code == 400
        assert "full variant" in r.json()["error"]


class TestApply:
    def test_legal_play(self, client):
        state = new_state(client, [1, 2])
        r = client.post("/game/apply", json={"state": state, "move": "PLAY_DECK"})
        body = r.json()
        assert r.status_code == 200
        assert body["pile_next"] == 2 and body["deck"] == [2]

    def test_illegal_play_names_the_precondition(self, client):
        state = new_state(client, [2, 1])
        state_after = client.post(
            "/game/apply", json={"state": state, "move": "TO_LEFT"}
        ).json()
        r = client.post(
            "/game/apply",
            json={
                "state": {k: v for k, v in state_after.items() if k not in ("won", "lost")},
                "move": "PLAY_LEFT",
            },
        )
        assert r.status_code == 400
        assert "left end is 2, pile needs 1" in r.json()["error"]

    def test_move_object_form_accepted(self, client):
        state = new_state(client, [1])
        r = client.post(
            "/game/apply", json={"state": state, "move": {"move": "PLAY_DECK"}}
        )
        assert r.status_code == 200 and r.json()["won"] is True

    def test_invariant_violation_is_400(self, client):
        bad = {"deck": [1, 1], "deque": [], "pile_next": 1, "n": 2}
        r = client.post("/game/apply", json={"state": bad, "move": "PLAY_DECK"})
        assert r.status_code == 400
        assert "partition" in r.json()["error"]


class TestHint:
    def test_clairvoyant_value_one(self, client):
        state = new_state(client, [2, 3, 1])
        r = client.post("/game/hint", json={"state": state, "mode": "clairvoyant"})
        body = r.json()
        assert r.status_code == 200
        assert body["value"] == {"num": "1", "den": "1"}
        assert body["move"] in ("TO_LEFT", "TO_RIGHT")

    def test_policy_mode(self, client):
        state = new_state(client, [2, 1])
        r = client.post("/game/hint", json={"state": state, "mode": "policy"})
        assert r.status_code == 200
        assert r.json()["value"] == {"num": "1", "den": "1"}

    def test_lost_state_is_409(self, client):
        lost = {"deck": [], "deque": [4, 2, 3], "pile_next": 2, "n": 4}
        r = client.post("/game/hint", json={"state": lost, "mode": "clairvoyant"})
        assert r.status_code == 409

    def test_bad_mode(self, client):
        state = new_state(client, [1])
        r = client.post("/game/hint", json={"state": state, "mode": "xray"})
        assert r.status_code == 400


class TestStatelessness:
    def test_identical_requests_identical_responses(self, client):
        state = new_state(client, [3, 1, 2])
        a = client.post("/game/hint", json={"state": state, "mode": "clairvoyant"})
        b = client.post("/game/hint", json={"state": state, "mode": "clairvoyant"})
        assert a.json() == b.json()

    def test_full_game_through_the_wire(self, client):
        state = new_state(client, [2, 3, 1])
        for _ in range(12):
            r = client.post("/game/hint", json={"state": state, "mode": "clairvoyant"})
            if r.status_code != 200:
                break
            move = r.json()["move"]
            state = client.post(
                "/game/apply", json={"state": state, "move": move}
            ).json()
            if state.pop("won", False):
                break
            state.pop("lost", None)
        assert state["pile_next"] == 4


#: Values that can never pass validation as a shuffle or a state.
POISON_SHUFFLES = [None, True, "1,2", [1, 1], [0], [1, "a"], [1, None], {"a": 1}, 42, [2]]
POISON_STATES = [
    None,
    "state",
    [],
    17,
    {},  # missing every field
    {"deque": [], "pile_next": 1, "n": 1},  # deck omitted
    {"deck": [1, 1], "deque": [], "pile_next": 1, "n": 2},  # duplicate rank
    {"deck": [1], "deque": [2], "pile_next": 1, "n": 3},  # rank 3 missing
    {"deck": [], "deque": [], "pile_next": 9, "n": 2},  # pile out of range
    {"deck": ["x"], "deque": [], "pile_next": 1, "n": 1},
    {"deck": [1], "deque": [], "pile_next": True, "n": 1},
    {"deck": [1], "deque": [], "pile_next": 1, "n": 10**40},
]


def random_junk(rng: random.Random):
    """A payload malformed for every endpoint: non-object bodies, or
    objects whose shuffle and state fields are both poisoned."""
    scalars = [None, True, 0, -1, 3.5, "", "PLAY_DECK", [], [[]], "null", [None]]
    roll = rng.random()
    if roll < 0.25:
        return rng.choice(scalars)
    body = {
        "shuffle": rng.choice(POISON_SHUFFLES),
        "state": rng.choice(POISON_STATES),
    }
    if rng.random() < 0.5:
        body["move"] = rng.choice([None, 7, "SHUFFLE", {"move": "x"}, []])
    if rng.random() < 0.5:
        body["mode"] = rng.choice([None, "xray", 3, []])
    if rng.random() < 0.3:
        body[rng.choice(["x", "deck", "variant"])] = rng.choice(scalars)
    return body


class TestFuzz:
    def test_malformed_payloads_only_4xx(self, client):
        rng = random.Random(20250811)
        endpoints = ["/game/new", "/game/moves", "/game/apply", "/game/hint"]
        for i in range(200):
            endpoint = endpoints[i % len(endpoints)]
            if i % 5 == 0:
                r = client.post(
                    endpoint,
                    content=b'{"broken json' + bytes([rng.randint(32, 126)]),
                    headers={"Content-Type": "application/json"},
                )
            else:
                r = client.post(endpoint, json=random_junk(rng))
            assert 400 <= r.status_code < 500, (endpoint, r.status_code)
        # still alive and correct afterwards
        assert client.get("/health").json() == {"ok": True}
