# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled twin of :mod:`permdek._core.pure`.

Same signatures, same move ordering, same canonicalization, same
answers; the difference is representation.  Container contents live in
C int buffers addressed by [l, r) windows (all container mutations are
end operations, so sibling branches never clobber each other's window),
and memo keys are small ``bytes`` built from the canonical orientation.
Ranks must fit a byte, which the desk-scale guards upstream guarantee.
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


cdef bytes _window_bytes(int* buf, int l, int r, bint orient):
    """bytes of buf[l..r); with orient, the lexicographically smaller of
    the window and its reversal (the end symmetry of a deque)."""
    cdef int m = r - l
    cdef bytearray out = bytearray(m)
    cdef int i, a, b
    cdef bint rev = False
    if orient:
        for i in range(m):
            a = buf[l + i]
            b = buf[r - 1 - i]
            if a != b:
                rev = b < a
                break
    if rev:
        for i in range(m):
            out[i] = <unsigned char>buf[r - 1 - i]
    else:
        for i in range(m):
            out[i] = <unsigned char>buf[l + i]
    return bytes(out)


# ---------------------------------------------------------------------------
# Multi-container obtainability
# ---------------------------------------------------------------------------

cdef int _obt_search(
    int* target,
    int n,
    int* kinds,        # 0 = stack, 1 = queue, 2 = deque
    int ncont,
    bint xfer,
    int* buf0, int* buf1,
    int l0, int r0, int l1, int r1,
    int i, int j,
    set seen,
    bint symmetric,
    bint canonicalize,
    bint use_memo,
) except -1:
    if j == n:
        return 1
    cdef bytes b0, b1
    cdef object key
    if use_memo:
        b0 = _window_bytes(buf0, l0, r0, canonicalize and kinds[0] == 2)
        if ncont == 2:
            b1 = _window_bytes(buf1, l1, r1, canonicalize and kinds[1] == 2)
            if canonicalize and symmetric and b1 < b0:
                key = (i, b1, b0)
            else:
                key = (i, b0, b1)
        else:
            key = (i, b0)
        if key in seen:
            return 0
        seen.add(key)
    cdef int need = target[j]
    cdef int ci, kind, v
    cdef int* buf
    cdef int l, r
    # Emits first, container order, deque head before tail.
    for ci in range(ncont):
        buf = buf0 if ci == 0 else buf1
        l = l0 if ci == 0 else l1
        r = r0 if ci == 0 else r1
        if l == r:
            continue
        kind = kinds[ci]
        if kind == 0:
            if buf[r - 1] == need:
                if ci == 0:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0, r0 - 1, l1, r1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                else:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0, r0, l1, r1 - 1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
        elif kind == 1:
            if buf[l] == need:
                if ci == 0:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0 + 1, r0, l1, r1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                else:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0, r0, l1 + 1, r1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
        else:
            if buf[l] == need:
                if ci == 0:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0 + 1, r0, l1, r1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                elif _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                 l0, r0, l1 + 1, r1, i, j + 1, seen,
                                 symmetric, canonicalize, use_memo):
                    return 1
            elif buf[r - 1] == need:
                if ci == 0:
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0, r0 - 1, l1, r1, i, j + 1, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                elif _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                 l0, r0, l1, r1 - 1, i, j + 1, seen,
                                 symmetric, canonicalize, use_memo):
                    return 1
    if i < n:
        v = i + 1
        if xfer and v == need:
            if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                           l0, r0, l1, r1, i + 1, j + 1, seen,
                           symmetric, canonicalize, use_memo):
                return 1
        for ci in range(ncont):
            kind = kinds[ci]
            if ci == 0:
                if kind == 2 and r0 > l0:
                    buf0[l0 - 1] = v
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0 - 1, r0, l1, r1, i + 1, j, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                buf0[r0] = v
                if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                               l0, r0 + 1, l1, r1, i + 1, j, seen,
                               symmetric, canonicalize, use_memo):
                    return 1
            else:
                if kind == 2 and r1 > l1:
                    buf1[l1 - 1] = v
                    if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                                   l0, r0, l1 - 1, r1, i + 1, j, seen,
                                   symmetric, canonicalize, use_memo):
                        return 1
                buf1[r1] = v
                if _obt_search(target, n, kinds, ncont, xfer, buf0, buf1,
                               l0, r0, l1, r1 + 1, i + 1, j, seen,
                               symmetric, canonicalize, use_memo):
                    return 1
    return 0


def config_obtainable(target, kinds, xfer=True, canonicalize=True, memo=True):
    """Compiled version of pure.config_obtainable; see there for the contract."""
    cdef tuple tgt = tuple(target)
    cdef int n = len(tgt)
    if n == 0:
        return True
    if n >= 256:
        raise ValueError("compiled kernel handles ranks below 256")
    cdef int ncont = len(kinds)
    cdef int kind_codes[2]
    cdef int ci
    for ci in range(ncont):
        if kinds[ci] == "stack":
            kind_codes[ci] = 0
        elif kinds[ci] == "queue":
            kind_codes[ci] = 1
        elif kinds[ci] == "deque":
            kind_codes[ci] = 2
        else:
            raise ValueError(f"unknown container kind {kinds[ci]!r}")
    if ncont == 1:
        kind_codes[1] = 0
    cdef bint symmetric = ncont == 2 and kinds[0] == kinds[1]
    cdef int cap = 2 * n + 4
    cdef int* mem = <int*>malloc((n + 2 * cap) * sizeof(int))
    if mem is NULL:
        raise MemoryError()
    cdef int* tbuf = mem
    cdef int* buf0 = mem + n
    cdef int* buf1 = mem + n + cap
    cdef int k
    for k in range(n):
        tbuf[k] = tgt[k]
    cdef int start = n + 2
    cdef set seen = set()
    try:
        return bool(
            _obt_search(
                tbuf, n, kind_codes, ncont, bool(xfer), buf0, buf1,
                start, start, start, start, 0, 0, seen,
                symmetric, bool(canonicalize), bool(memo),
            )
        )
    finally:
        free(mem)


# ---------------------------------------------------------------------------
# Deque solitaire winnability
# ---------------------------------------------------------------------------

cdef int _dek_search(
    int* deck, int deck_len,
    int* buf, int l, int r,
    int i, int k, int n,
    bint single_end, bint greedy, bint canonical,
    set failed,
) except -1:
    if k > n:
        return 1
    cdef object key = (i, k, _window_bytes(buf, l, r, canonical))
    if key in failed:
        return 0
    cdef bint ok = False
    cdef bint deck_left = i < deck_len
    cdef int v
    if greedy:
        # Playing the needed card the moment it is available is a safe
        # exchange (see pure.dek_winnable); the branch is forced.
        if deck_left and deck[i] == k:
            ok = _dek_search(deck, deck_len, buf, l, r, i + 1, k + 1, n,
                             single_end, greedy, canonical, failed)
        elif r > l and buf[l] == k:
            ok = _dek_search(deck, deck_len, buf, l + 1, r, i, k + 1, n,
                             single_end, greedy, canonical, failed)
        elif (not single_end) and r > l and buf[r - 1] == k:
            ok = _dek_search(deck, deck_len, buf, l, r - 1, i, k + 1, n,
                             single_end, greedy, canonical, failed)
        elif deck_left:
            v = deck[i]
            buf[l - 1] = v
            ok = _dek_search(deck, deck_len, buf, l - 1, r, i + 1, k, n,
                             single_end, greedy, canonical, failed)
            if (not ok) and (not single_end):
                buf[r] = v
                ok = _dek_search(deck, deck_len, buf, l, r + 1, i + 1, k, n,
                                 single_end, greedy, canonical, failed)
    else:
        if deck_left and deck[i] == k:
            ok = _dek_search(deck, deck_len, buf, l, r, i + 1, k + 1, n,
                             single_end, greedy, canonical, failed)
        if (not ok) and r > l and buf[l] == k:
            ok = _dek_search(deck, deck_len, buf, l + 1, r, i, k + 1, n,
                             single_end, greedy, canonical, failed)
        if (not ok) and (not single_end) and r > l and buf[r - 1] == k:
            ok = _dek_search(deck, deck_len, buf, l, r - 1, i, k + 1, n,
                             single_end, greedy, canonical, failed)
        if (not ok) and deck_left:
            v = deck[i]
            buf[l - 1] = v
            ok = _dek_search(deck, deck_len, buf, l - 1, r, i + 1, k, n,
                             single_end, greedy, canonical, failed)
            if (not ok) and (not single_end):
                buf[r] = v
                ok = _dek_search(deck, deck_len, buf, l, r + 1, i + 1, k, n,
                                 single_end, greedy, canonical, failed)
    if not ok:
        failed.add(key)
    return ok


def dek_winnable(deck, board=(), next_needed=1, n=None,
                 single_end=False, greedy_play=True, canonicalize=True):
    """Compiled version of pure.dek_winnable; see there for the contract."""
    cdef tuple deck_t = tuple(deck)
    cdef tuple board_t = tuple(board)
    cdef int deck_len = len(deck_t)
    cdef int bn = len(board_t)
    cdef int k0 = next_needed
    cdef int nn
    if n is None:
        nn = deck_len + bn + k0 - 1
    else:
        nn = n
    if k0 > nn:
        return True
    if nn >= 256:
        raise ValueError("compiled kernel handles ranks below 256")
    cdef int cap = 2 * deck_len + bn + 2
    cdef int* mem = <int*>malloc((deck_len + cap) * sizeof(int))
    if mem is NULL:
        raise MemoryError()
    cdef int* dbuf = mem
    cdef int* buf = mem + deck_len
    cdef int idx
    for idx in range(deck_len):
        dbuf[idx] = deck_t[idx]
    cdef int l = deck_len + 1
    for idx in range(bn):
        buf[l + idx] = board_t[idx]
    cdef set failed = set()
    try:
        return bool(
            _dek_search(
                dbuf, deck_len, buf, l, l + bn, 0, k0, nn,
                bool(single_end), bool(greedy_play), bool(canonicalize), failed,
            )
        )
    finally:
        free(mem)
