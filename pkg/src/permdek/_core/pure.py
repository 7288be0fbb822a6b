"""Pure-Python hot kernels: the two memoized reachability searches.

These are the inner loops of every exhaustive sweep -- deciding whether
a target permutation is obtainable by a container configuration, and
whether a deque-solitaire shuffle is winnable.  A compiled twin of this
module (``_speedups``, built from the same algorithms) is preferred at
import time when available; both expose identical signatures and must
return identical answers, which the test suite checks.

Both searches walk a DAG (every move strictly increases consumed +
emitted cards), depth-first, recording failed states.  Canonicalization
halves or quarters the memo space using provable symmetries only:
interchangeable identical containers and the end-symmetry of a deque.
"""
from __future__ import annotations

import sys

BACKEND_NAME = "pure"

_RECURSION_HEADROOM = 10_000


def _ensure_recursion(depth: int) -> None:
    if sys.getrecursionlimit() < depth + _RECURSION_HEADROOM:
        sys.setrecursionlimit(depth + _RECURSION_HEADROOM)


def config_obtainable(
    target: tuple[int, ...],
    kinds: tuple[str, ...],
    xfer: bool = True,
    canonicalize: bool = True,
    memo: bool = True,
) -> bool:
    """Can parallel containers turn the input stream 1..n into ``target``?

    ``kinds`` is one or two of "stack", "queue", "deque".  Any container
    may take the input front; output comes from any container's legal
    exit, or straight from the input when ``xfer`` and the front is the
    next needed value.  Emitting moves are tried before moving values
    in, so witnesses are found fast; ``memo=False`` turns the search
    into plain tree exploration (for small cross-checks only).
    """
    n = len(target)
    if n == 0:
        return True
    _ensure_recursion(3 * n)
    ncont = len(kinds)
    symmetric = ncont == 2 and kinds[0] == kinds[1]
    is_deque = tuple(k == "deque" for k in kinds)
    seen: set = set()

    def canon(conts: tuple[tuple[int, ...], ...]) -> tuple:
        if canonicalize:
            cs = tuple(
                min(c, c[::-1]) if is_deque[i] else c for i, c in enumerate(conts)
            )
            return tuple(sorted(cs)) if symmetric else cs
        return conts

    def search(i: int, j: int, conts: tuple[tuple[int, ...], ...]) -> bool:
        if j == n:
            return True
        if memo:
            key = (i, canon(conts))
            if key in seen:
                return False
            seen.add(key)
        need = target[j]
        for ci in range(ncont):
            c = conts[ci]
            if not c:
                continue
            kind = kinds[ci]
            if kind == "stack":
                exits = ((c[-1], c[:-1]),)
            elif kind == "queue":
                exits = ((c[0], c[1:]),)
            else:
                exits = ((c[0], c[1:]), (c[-1], c[:-1]))
            for value, rest in exits:
                if value == need:
                    if search(i, j + 1, conts[:ci] + (rest,) + conts[ci + 1 :]):
                        return True
                    break  # both deque ends equal need only when len(c) == 1
        if i < n:
            v = i + 1
            if xfer and v == need:
                if search(i + 1, j + 1, conts):
                    return True
            for ci in range(ncont):
                c = conts[ci]
                if is_deque[ci]:
                    entries = ((v,) + c, c + (v,)) if c else ((v,),)
                else:
                    entries = (c + (v,),)
                for nc in entries:
                    if search(i + 1, j, conts[:ci] + (nc,) + conts[ci + 1 :]):
                        return True
        return False

    return search(0, 0, ((),) * ncont)


def dek_winnable(
    deck: tuple[int, ...],
    board: tuple[int, ...] = (),
    next_needed: int = 1,
    n: int | None = None,
    single_end: bool = False,
    greedy_play: bool = True,
    canonicalize: bool = True,
) -> bool:
    """Is the deque solitaire position winnable with full deck knowledge?

    ``deck`` is top-first, ``board`` is the deque left-to-right, and the
    pile holds everything below ``next_needed``.  ``single_end``
    restricts play to the left end (the stack specialization of the
    game).

    ``greedy_play`` applies a safe exchange argument: when the next
    needed card is available it is played immediately.  Nothing else can
    reach the pile before it, cards stacked onto it would entomb it, and
    intervening moves to the other end commute with playing it -- so a
    winning line never delays an available play.  ``greedy_play=False``
    explores the full permissive move set; both modes must agree.
    """
    if n is None:
        n = len(deck) + len(board) + next_needed - 1
    _ensure_recursion(3 * n)
    failed: set = set()

    def search(i: int, dq: tuple[int, ...], k: int) -> bool:
        if k > n:
            return True
        key = (i, k, min(dq, dq[::-1]) if canonicalize else dq)
        if key in failed:
            return False
        deck_empty = i >= len(deck)
        if greedy_play:
            if not deck_empty and deck[i] == k:
                ok = search(i + 1, dq, k + 1)
            elif dq and dq[0] == k:
                ok = search(i, dq[1:], k + 1)
            elif not single_end and dq and dq[-1] == k:
                ok = search(i, dq[:-1], k + 1)
            elif not deck_empty:
                v = deck[i]
                ok = search(i + 1, (v,) + dq, k)
                if not ok and not single_end:
                    ok = search(i + 1, dq + (v,), k)
            else:
                ok = False
        else:
            ok = False
            if not deck_empty and deck[i] == k:
                ok = search(i + 1, dq, k + 1)
            if not ok and dq and dq[0] == k:
                ok = search(i, dq[1:], k + 1)
            if not ok and not single_end and dq and dq[-1] == k:
                ok = search(i, dq[:-1], k + 1)
            if not ok and not deck_empty:
                v = deck[i]
                ok = search(i + 1, (v,) + dq, k)
                if not ok and not single_end:
                    ok = search(i + 1, dq + (v,), k)
        if not ok:
            failed.add(key)
        return ok

    return search(0, tuple(board), next_needed)
