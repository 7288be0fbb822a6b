from __future__ import annotations

import itertools

import pytest


def perms_of(n: int):
    """All of S_n, lexicographic, as 1-based tuples."""
    return itertools.permutations(range(1, n + 1))


@pytest.fixture(scope="session")
def game_server():
    """A live JSON service on an ephemeral loopback port."""
    import threading

    from permdek.service import make_server

    server = make_server(0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()
