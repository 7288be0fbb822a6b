"""Permutations in one-line notation and pattern-avoidance predicates.

A permutation of size n is a tuple of the integers 1..n, each occurring
exactly once.  Positions are 1-based in error messages and documented
results (p_1 .. p_n).  The empty tuple is the unique permutation of size
0; it avoids every pattern, is stackable and queueable, and is accepted
everywhere downstream.

The two predicates that matter most here, ``avoids_312`` and
``avoids_321``, are written as direct index scans so that they stay
independent of both the generic subsequence matcher and the machine
simulations in :mod:`permdek.machines`; the test suite uses that
independence for non-circular cross-checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

PATTERN_312: Perm = (3, 1, 2)
PATTERN_321: Perm = (3, 2, 1)

#: Generic containment is a naive O(n^k) scan; larger patterns are refused.
MAX_PATTERN_LENGTH = 4


class PermutationError(ValueError):
    """A sequence that fails to be a permutation of 1..n."""


def validate_permutation(seq: Iterable[int]) -> Perm:
    """Return ``tuple(seq)`` if it is a permutation of 1..len(seq).

    Entries are preserved verbatim.  Raises :class:`PermutationError`
    naming the offending (1-based) position for duplicates, out-of-range
    values, and non-integers.

    >>> validate_permutation([2, 1, 5, 7, 6, 4, 3])
    (2, 1, 5, 7, 6, 4, 3)
    >>> validate_permutation(())
    ()
    """
    entries = tuple(seq)
    n = len(entries)
    seen = [False] * (n + 1)
    for pos, v in enumerate(entries, start=1):
        if isinstance(v, bool) or not isinstance(v, int):
            raise PermutationError(f"entry at position {pos} is not an integer: {v!r}")
        if not 1 <= v <= n:
            raise PermutationError(f"entry {v} at position {pos} is out of range 1..{n}")
        if seen[v]:
            raise PermutationError(f"duplicate value {v} at position {pos}")
        seen[v] = True
    return entries


def parse_permutation(text: str) -> Perm:
    """Parse the comma-separated wire format, e.g. ``"2,1,5,7,6,4,3"``.

    Whitespace around values is tolerated; the empty (or all-whitespace)
    string denotes the empty permutation.
    """
    stripped = text.strip()
    if not stripped:
        return ()
    parts = stripped.split(",")
    values = []
    for pos, part in enumerate(parts, start=1):
        try:
            values.append(int(part.strip()))
        except ValueError:
            raise PermutationError(
                f"entry at position {pos} is not an integer: {part.strip()!r}"
            ) from None
    return validate_permutation(values)


def format_permutation(p: Sequence[int]) -> str:
    """Inverse of :func:`parse_permutation`: ``(2, 1) -> "2,1"``."""
    return ",".join(str(v) for v in p)


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def inverse(p: Sequence[int]) -> Perm:
    """The inverse permutation: position of each value 1..n in p."""
    inv = [0] * len(p)
    for pos, v in enumerate(p, start=1):
        inv[v - 1] = pos
    return tuple(inv)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``pattern``.

    ``pattern`` must itself be a permutation of length at most
    :data:`MAX_PATTERN_LENGTH`; the scan enumerates all subsequences of
    that length, which is honest and fast enough at desk scale.

    >>> contains_pattern((4, 2, 3, 1), (3, 2, 1))
    True
    >>> contains_pattern((2, 1, 5, 7, 6, 4, 3), (3, 1, 2))
    False
    """
    pattern = validate_permutation(pattern)
    k = len(pattern)
    if k > MAX_PATTERN_LENGTH:
        raise ValueError(
            f"pattern length {k} exceeds {MAX_PATTERN_LENGTH}; "
            "use a specialized predicate instead"
        )
    if k == 0:
        return True
    if k > len(p):
        return False
    # s matches iff the relative order of s equals that of the pattern.
    rel = tuple(sorted(range(k), key=lambda i: pattern[i]))
    for sub in itertools.combinations(p, k):
        ranks = sorted(range(k), key=lambda i: sub[i])
        if tuple(ranks) == rel:
            return True
    return False


def avoids_312(p: Sequence[int]) -> bool:
    """True iff there are no positions i<j<k with p_j < p_k < p_i.

    Scan over the middle position j: a 312 occurrence with its "1" at j
    exists iff some later value lies strictly between p_j and the
    running maximum of p_1..p_{j-1}.

    >>> avoids_312((2, 1, 5, 7, 6, 4, 3))
    True
    >>> avoids_312((3, 1, 2))
    False
    """
    prefix_max = 0
    n = len(p)
    for j in range(n):
        pj = p[j]
        if pj < prefix_max:
            for k in range(j + 1, n):
                if pj < p[k] < prefix_max:
                    return False
        else:
            prefix_max = pj
    return True


def avoids_321(p: Sequence[int]) -> bool:
    """True iff ``p`` has no strictly decreasing subsequence of length 3.

    A decreasing triple exists iff some position has a larger value
    before it and a smaller value after it.

    >>> avoids_321((2, 1, 5, 7, 3, 4, 6))
    True
    >>> avoids_321((3, 2, 1))
    False
    """
    n = len(p)
    suffix_min = [0] * (n + 1)
    suffix_min[n] = n + 1
    for j in range(n - 1, -1, -1):
        suffix_min[j] = min(p[j], suffix_min[j + 1])
    prefix_max = 0
    for j in range(n):
        if prefix_max > p[j] > suffix_min[j + 1]:
            return False
        prefix_max = max(prefix_max, p[j])
    return True


def record_setters(p: Sequence[int]) -> tuple[int, ...]:
    """1-based positions of the left-to-right maxima of ``p``.

    Position 1 is always included for nonempty ``p``; the values at the
    returned positions are strictly increasing by construction.

    >>> record_setters((2, 1, 5, 7, 3, 4, 6))
    (1, 3, 4)
    """
    positions = []
    best = 0
    for pos, v in enumerate(p, start=1):
        if v > best:
            positions.append(pos)
            best = v
    return tuple(positions)


@dataclass(frozen=True)
class Decomposition:
    """The canonical split of a permutation into two increasing subsequences.

    ``record_positions``/``record_values`` hold the left-to-right maxima;
    ``rest_positions``/``rest_values`` the complementary subsequence.  An
    instance is only constructed when the rest is itself increasing, so
    existence of the decomposition witnesses queueability.
    """

    record_positions: tuple[int, ...]
    record_values: tuple[int, ...]
    rest_positions: tuple[int, ...]
    rest_values: tuple[int, ...]


def two_increasing_decomposition(p: Sequence[int]) -> Decomposition | None:
    """Split ``p`` into record-setters plus the rest, if the rest increases.

    Returns ``None`` when the complementary subsequence is not strictly
    increasing (equivalently, when ``p`` contains a decreasing triple).

    >>> d = two_increasing_decomposition((2, 1, 5, 7, 3, 4, 6))
    >>> d.record_values, d.rest_values
    ((2, 5, 7), (1, 3, 4, 6))
    >>> two_increasing_decomposition((3, 2, 1)) is None
    True
    """
    rec_pos = record_setters(p)
    rec_set = set(rec_pos)
    rest_pos = tuple(i for i in range(1, len(p) + 1) if i not in rec_set)
    rest_val = tuple(p[i - 1] for i in rest_pos)
    if any(a >= b for a, b in zip(rest_val, rest_val[1:])):
        return None
    return Decomposition(
        record_positions=rec_pos,
        record_values=tuple(p[i - 1] for i in rec_pos),
        rest_positions=rest_pos,
        rest_values=rest_val,
    )


def all_permutations_of(n: int) -> Iterator[Perm]:
    """All of S_n in lexicographic order (no guard; callers cap n)."""
    return iter(itertools.permutations(range(1, n + 1)))
