"""Lattice paths and the stack/queue bijection built on top of them.

Paths are words over U=(1,1), D=(1,-1), H=(1,0).  A valid path never
dips below the x-axis and returns to it; it is classified as

* ``dyck``               -- no H steps,
* ``peakless_weak_dyck`` -- H allowed, but no U immediately followed by D,
* ``weak_dyck``          -- anything else valid.

The empty word is labelled ``dyck`` (the most specific bucket) but
counts as peakless wherever peaklessness is required; predicates, not
labels, gate the operations below.

Peak removal (UD -> H) turns Dyck paths into peakless weak Dyck paths
and H -> UD restores them; the two are mutually inverse because UD
occurrences can never overlap.  Replaying a peakless weak Dyck path as a
stack trace or as a queue trace (U = move the input front in, H =
transfer it, D = emit) decodes it into the unique stackable, resp.
queueable, permutation with that height profile.  Pairing the two
decodings of one path is the Knuth-Richards bijection between
312-avoiding and 321-avoiding permutations, and replacing the container
by a set extends both directions to idempotent projections
(:func:`stackit`, :func:`queueit`) defined on every permutation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import machines
from .perms import Perm, validate_permutation

STEPS = "UDH"

CLASS_DYCK = "dyck"
CLASS_WEAK = "weak_dyck"
CLASS_PEAKLESS = "peakless_weak_dyck"
CLASS_INVALID = "invalid"

MAX_ENUMERATION_SPAN = 14


@dataclass(frozen=True)
class LatticePath:
    word: str
    klass: str
    #: for invalid paths: index of the step that dips below the axis, or
    #: len(word) when the path fails to return to the axis.
    violation: int | None = None

    @property
    def span(self) -> int:
        """Number of values a machine replay of this path processes."""
        return self.word.count("U") + self.word.count("H")

    def __str__(self) -> str:
        return self.word


def _as_word(path: LatticePath | str | Iterable[str]) -> str:
    if isinstance(path, LatticePath):
        return path.word
    word = path if isinstance(path, str) else "".join(path)
    bad = next((ch for ch in word if ch not in STEPS), None)
    if bad is not None:
        raise ValueError(f"step {bad!r} is not one of U, D, H")
    return word


def classify_path(steps: LatticePath | str | Iterable[str]) -> LatticePath:
    """Validate nonnegativity and return-to-zero; assign the tightest class.

    >>> classify_path("UUDDUUUDUUDDDD").klass
    'dyck'
    >>> classify_path("UHDUUHUHDDD").klass
    'peakless_weak_dyck'
    >>> classify_path("UDDU").violation
    2
    """
    word = _as_word(steps)
    height = 0
    for i, ch in enumerate(word):
        if ch == "U":
            height += 1
        elif ch == "D":
            height -= 1
            if height < 0:
                return LatticePath(word, CLASS_INVALID, violation=i)
    if height != 0:
        return LatticePath(word, CLASS_INVALID, violation=len(word))
    if "H" not in word:
        return LatticePath(word, CLASS_DYCK)
    if "UD" not in word:
        return LatticePath(word, CLASS_PEAKLESS)
    return LatticePath(word, CLASS_WEAK)


def is_peakless_weak(path: LatticePath | str) -> bool:
    """Valid, no UD occurrence; true for the empty path."""
    p = classify_path(path)
    return p.klass in (CLASS_PEAKLESS, CLASS_DYCK) and "UD" not in p.word


def remove_peaks(path: LatticePath | str) -> LatticePath:
    """Replace every UD peak by H; Dyck paths only.

    Peaks are pairwise disjoint (a D has a unique predecessor step), so
    one left-to-right scan is unambiguous.  The result is shorter by the
    number of peaks and is a peakless weak Dyck path.

    >>> remove_peaks("UUDDUUUDUUDDDD").word
    'UHDUUHUHDDD'
    """
    p = classify_path(path)
    if p.klass != CLASS_DYCK:
        raise ValueError(f"peak removal needs a Dyck path, got class {p.klass!r}")
    out = []
    i = 0
    word = p.word
    while i < len(word):
        if word[i] == "U" and i + 1 < len(word) and word[i + 1] == "D":
            out.append("H")
            i += 2
        else:
            out.append(word[i])
            i += 1
    return classify_path("".join(out))


def restore_peaks(path: LatticePath | str) -> LatticePath:
    """Replace every H by UD; inverse of :func:`remove_peaks`.

    >>> restore_peaks("UHDUUHUHDDD").word
    'UUDDUUUDUUDDDD'
    """
    p = classify_path(path)
    if not is_peakless_weak(p):
        raise ValueError(
            f"peak restoration needs a peakless weak Dyck path, got class {p.klass!r}"
        )
    return classify_path(p.word.replace("H", "UD"))


def catalan(n: int) -> int:
    """The n-th Catalan number, binom(2n+1, n+1) / (2n+1), exactly.

    >>> [catalan(n) for n in range(8)]
    [1, 1, 2, 5, 14, 42, 132, 429]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, r = divmod(math.comb(2 * n + 1, n + 1), 2 * n + 1)
    assert r == 0
    return q


def validate_ballot_sequence(terms: Iterable[int]) -> tuple[int, ...]:
    """Check for n+1 terms +1 and n terms -1; return the tuple."""
    seq = tuple(terms)
    plus = seq.count(1)
    minus = seq.count(-1)
    if plus + minus != len(seq):
        raise ValueError("ballot sequences contain only +1 and -1 terms")
    if plus != minus + 1:
        raise ValueError(f"need n+1 terms +1 and n terms -1, got {plus} and {minus}")
    return seq


def cycle_lemma_canonical(terms: Iterable[int]) -> LatticePath:
    """The Dyck path of length 2n carried by a ballot sequence.

    Of the 2n+1 rotations of a sequence of n+1 (+1)s and n (-1)s,
    exactly one keeps every partial sum positive -- equivalently, after
    its forced leading +1 is discarded the rest never dips below the
    axis.  That rotation's tail, read as U/D steps, is the result.
    Uniqueness is asserted by checking all rotations.

    >>> cycle_lemma_canonical((-1, 1, 1)).word
    'UD'
    >>> cycle_lemma_canonical((1, -1, 1, -1, 1)).word
    'UDUD'
    """
    seq = validate_ballot_sequence(terms)
    m = len(seq)
    starts = []
    for s in range(m):
        total = 0
        for i in range(m):
            total += seq[(s + i) % m]
            if total <= 0:
                break
        else:
            starts.append(s)
    assert len(starts) == 1, f"expected one positive rotation, found {len(starts)}"
    s = starts[0]
    rotation = [seq[(s + i) % m] for i in range(m)]
    assert rotation[0] == 1
    word = "".join("U" if t == 1 else "D" for t in rotation[1:])
    path = classify_path(word)
    assert path.klass == CLASS_DYCK
    return path


def enumerate_dyck_paths(n: int) -> Iterator[LatticePath]:
    """Yield every Dyck path of length 2n exactly once (count = catalan(n))."""
    if not 0 <= n <= MAX_ENUMERATION_SPAN:
        raise ValueError(f"n must be in 0..{MAX_ENUMERATION_SPAN}")

    def walk(prefix: list[str], ups: int, downs: int) -> Iterator[LatticePath]:
        if ups == downs == 0:
            yield LatticePath("".join(prefix), CLASS_DYCK)
            return
        if ups:
            prefix.append("U")
            yield from walk(prefix, ups - 1, downs)
            prefix.pop()
        if downs > ups:
            prefix.append("D")
            yield from walk(prefix, ups, downs - 1)
            prefix.pop()

    return walk([], n, n)


def _replay(path: LatticePath | str, container: str) -> Perm:
    p = classify_path(path)
    if not is_peakless_weak(p):
        raise ValueError(
            f"decoding needs a peakless weak Dyck path, got class {p.klass!r}"
        )
    contents: list[int] = []
    head = 0
    out: list[int] = []
    next_in = 1
    for ch in p.word:
        if ch == "U":
            contents.append(next_in)
            next_in += 1
        elif ch == "H":
            out.append(next_in)
            next_in += 1
        else:
            if container == machines.STACK:
                out.append(contents.pop())
            else:
                out.append(contents[head])
                head += 1
    return validate_permutation(out)


def decode_stackable(path: LatticePath | str) -> Perm:
    """The unique stackable permutation whose canonical profile is ``path``.

    U moves the next input value onto a stack, H transfers it, D pops.

    >>> decode_stackable("UHDUUHUHDDD")
    (2, 1, 5, 7, 6, 4, 3)
    """
    return _replay(path, machines.STACK)


def decode_queueable(path: LatticePath | str) -> Perm:
    """The unique queueable permutation whose canonical profile is ``path``.

    Same replay with a queue: D emits the head.

    >>> decode_queueable("UHDUUHUHDDD")
    (2, 1, 5, 7, 3, 4, 6)
    """
    return _replay(path, machines.QUEUE)


def canonical_profile(p: Perm) -> LatticePath:
    """The lazy set-size record of ``p``, a peakless weak Dyck path."""
    return machines.trace_height_profile(machines.realize_with_set(p))


def knuth_richards(p: Perm) -> Perm:
    """Map a 312-avoiding permutation to its 321-avoiding partner.

    Produce ``p`` with a stack (transfers allowed) but feed the moves to
    a queue instead: the output is the queueable permutation sharing
    ``p``'s canonical height profile.

    >>> knuth_richards((2, 1, 5, 7, 6, 4, 3))
    (2, 1, 5, 7, 3, 4, 6)
    """
    trace = machines.realize_with_stack(p, allow_xfer=True)
    if trace is None:
        witness = machines.stack_block_witness(p)
        raise ValueError(f"not 312-avoiding: witness {witness}")
    return decode_queueable(machines.trace_height_profile(trace))


def knuth_richards_inv(p: Perm) -> Perm:
    """Inverse of :func:`knuth_richards`: 321-avoiders back to 312-avoiders.

    >>> knuth_richards_inv((2, 1, 5, 7, 3, 4, 6))
    (2, 1, 5, 7, 6, 4, 3)
    """
    trace = machines.realize_with_queue(p)
    if trace is None:
        witness = machines.queue_block_witness(p)
        raise ValueError(f"not 321-avoiding: witness {witness}")
    return decode_stackable(machines.trace_height_profile(trace))


def stackit(p: Perm) -> Perm:
    """Project any permutation onto the stackable one with its set profile.

    Idempotent; fixes exactly the 312-avoiding permutations, and its
    restriction to queueable permutations inverts :func:`queueit`.

    >>> stackit((3, 1, 2))
    (3, 2, 1)
    """
    return decode_stackable(canonical_profile(p))


def queueit(p: Perm) -> Perm:
    """Project any permutation onto the queueable one with its set profile.

    Idempotent; restricted to stackable permutations it agrees with
    :func:`knuth_richards`.

    >>> queueit((3, 1, 2))
    (3, 1, 2)
    """
    return decode_queueable(canonical_profile(p))


def render_ascii(path: LatticePath | str) -> str:
    """Draw the profile with '/', '\\\\' and '_' on a character grid.

    >>> print(render_ascii("UHD"))
     _
    / \\
    """
    p = classify_path(path)
    if p.klass == CLASS_INVALID:
        raise ValueError(f"cannot draw an invalid path (violation at {p.violation})")
    if not p.word:
        return ""
    cells: dict[tuple[int, int], str] = {}
    height = 0
    max_row = 0
    for col, ch in enumerate(p.word):
        if ch == "U":
            cells[(height, col)] = "/"
            height += 1
        elif ch == "D":
            height -= 1
            cells[(height, col)] = "\\"
        else:
            cells[(height, col)] = "_"
        max_row = max(max_row, height)
    width = len(p.word)
    rows = []
    for row in range(max_row, -1, -1):
        line = "".join(cells.get((row, col), " ") for col in range(width))
        rows.append(line.rstrip())
    while rows and not rows[0]:
        rows.pop(0)
    return "\n".join(rows)
