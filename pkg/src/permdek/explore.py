"""Exhaustive enumeration over S_n and multi-container obtainability.

The open questions this instrument probes -- what two parallel stacks,
two parallel queues, or a stack next to a queue can produce -- have no
known closed forms, so everything here is desk scale and guarded.
Containers operate in parallel: any one of them may receive the input
front, and the output may take any container's legal exit (or the input
front directly, when transfers are enabled).  Series composition is a
different machine and is out of scope.

Counting is exact; elapsed times in a :class:`CountTable` are
informational only.  Counts are deterministic however S_n is
partitioned, because each permutation is decided independently.
"""
from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import _core, machines, paths, perms
from .perms import Perm

log = logging.getLogger(__name__)

CONTAINER_KINDS = ("stack", "queue", "deque")

MAX_ENUM_N = 10
MAX_DECIDE_N = 9
MAX_COUNT_N = 8
MAX_VERIFY_N = 8


@dataclass(frozen=True)
class MachineConfig:
    """One or two parallel containers plus the direct-transfer flag."""

    containers: tuple[str, ...]
    xfer: bool = True

    def __post_init__(self) -> None:
        if not 1 <= len(self.containers) <= 2:
            raise ValueError("configs hold one or two containers")
        for kind in self.containers:
            if kind not in CONTAINER_KINDS:
                raise ValueError(f"unknown container kind {kind!r}")

    def label(self) -> str:
        word = "+".join(self.containers)
        return word + ("+xfer" if self.xfer else "")


@dataclass(frozen=True)
class CountTable:
    n: int
    config: MachineConfig
    count: int
    elapsed: float  # seconds


def all_permutations(n: int, start: int = 0, stop: int | None = None) -> Iterator[Perm]:
    """S_n in lexicographic order; [start, stop) slices a contiguous range.

    Ranges let callers split a sweep into disjoint chunks whose counts
    sum to the full count.
    """
    if not 0 <= n <= MAX_ENUM_N:
        raise ValueError(f"n must be in 0..{MAX_ENUM_N}")
    stream = itertools.permutations(range(1, n + 1))
    if start or stop is not None:
        return itertools.islice(stream, start, stop)
    return iter(stream)


def obtainable(
    config: MachineConfig,
    p: Perm,
    canonicalize: bool = True,
    memo: bool = True,
) -> bool:
    """Decide whether ``config`` can produce ``p`` from the stream 1..n.

    Depth-first search over canonicalized states; agrees with the
    closed-form predicates for single-stack and single-queue configs.
    """
    p = perms.validate_permutation(p)
    if len(p) > MAX_DECIDE_N:
        raise ValueError(f"n must be at most {MAX_DECIDE_N}")
    return _core.config_obtainable(
        p, config.containers, config.xfer, canonicalize=canonicalize, memo=memo
    )


# Witness ops: ("XFER", value) | ("IN", container, end, value) |
# ("OUT", container, end, value), end "" for stack/queue, "L"/"R" for deque.
WitnessOp = tuple


def obtain_witness(config: MachineConfig, p: Perm) -> list[WitnessOp] | None:
    """A legal move sequence producing ``p``, or None when unobtainable.

    Emitting moves are tried first, so the witness is the one the
    decision search would find; replay it with :func:`replay_witness`.
    """
    p = perms.validate_permutation(p)
    n = len(p)
    if n > MAX_DECIDE_N:
        raise ValueError(f"n must be at most {MAX_DECIDE_N}")
    kinds = config.containers
    ncont = len(kinds)
    failed: set = set()

    def search(
        i: int, j: int, conts: tuple[tuple[int, ...], ...]
    ) -> list[WitnessOp] | None:
        if j == n:
            return []
        key = (i, conts)
        if key in failed:
            return None
        need = p[j]
        for ci in range(ncont):
            c = conts[ci]
            if not c:
                continue
            kind = kinds[ci]
            if kind == "stack":
                exits = (("", c[-1], c[:-1]),)
            elif kind == "queue":
                exits = (("", c[0], c[1:]),)
            else:
                exits = (("L", c[0], c[1:]), ("R", c[-1], c[:-1]))
            for end, value, rest in exits:
                if value == need:
                    tail = search(i, j + 1, conts[:ci] + (rest,) + conts[ci + 1 :])
                    if tail is not None:
                        return [("OUT", ci, end, value)] + tail
                    break
        if i < n:
            v = i + 1
            if config.xfer and v == need:
                tail = search(i + 1, j + 1, conts)
                if tail is not None:
                    return [("XFER", v)] + tail
            for ci in range(ncont):
                c = conts[ci]
                if kinds[ci] == "deque":
                    entries = [("L", (v,) + c)]
                    if c:
                        entries.append(("R", c + (v,)))
                else:
                    entries = [("", c + (v,))]
                for end, nc in entries:
                    tail = search(i + 1, j, conts[:ci] + (nc,) + conts[ci + 1 :])
                    if tail is not None:
                        return [("IN", ci, end, v)] + tail
        failed.add(key)
        return None

    return search(0, 0, ((),) * ncont)


def replay_witness(config: MachineConfig, p: Perm, ops: Sequence[WitnessOp]) -> bool:
    """Check that ``ops`` is legal for ``config`` and outputs exactly ``p``."""
    n = len(p)
    conts: list[list[int]] = [[] for _ in config.containers]
    out: list[int] = []
    next_in = 1
    for op in ops:
        tag = op[0]
        if tag == "XFER":
            if not config.xfer or op[1] != next_in:
                return False
            out.append(next_in)
            next_in += 1
        elif tag == "IN":
            _, ci, end, v = op
            if v != next_in or next_in > n:
                return False
            kind = config.containers[ci]
            if kind == "deque" and end == "L":
                conts[ci].insert(0, v)
            else:
                conts[ci].append(v)
            next_in += 1
        elif tag == "OUT":
            _, ci, end, v = op
            c = conts[ci]
            if not c:
                return False
            kind = config.containers[ci]
            if kind == "stack":
                got = c.pop()
            elif kind == "queue":
                got = c.pop(0)
            else:
                got = c.pop(0) if end == "L" else c.pop()
            if got != v:
                return False
            out.append(v)
        else:
            return False
    return tuple(out) == tuple(p) and all(not c for c in conts)


def count_obtainable(config: MachineConfig, n: int) -> CountTable:
    """Count the permutations of S_n obtainable by ``config``, exactly."""
    if not 0 <= n <= MAX_COUNT_N:
        raise ValueError(f"n must be in 0..{MAX_COUNT_N}")
    started = time.perf_counter()
    count = sum(
        1
        for p in all_permutations(n)
        if _core.config_obtainable(p, config.containers, config.xfer)
    )
    elapsed = time.perf_counter() - started
    log.info("count %s n=%d -> %d in %.3fs", config.label(), n, count, elapsed)
    return CountTable(n=n, config=config, count=count, elapsed=elapsed)


def longest_decreasing_run_under(p: Perm, limit: int) -> bool:
    """True iff ``p`` has no decreasing subsequence of length ``limit``.

    Patience-style scan, independent of both the search engine and the
    pattern matcher: ``piles[d]`` is the largest tail value of a
    decreasing subsequence of length d+1 seen so far.
    """
    piles: list[int] = []
    for v in p:
        placed = False
        for d in range(len(piles)):
            if piles[d] > v:
                continue
            piles[d] = v
            placed = True
            break
        if not placed:
            piles.append(v)
            if len(piles) >= limit:
                return False
    return True


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    n: int
    checks: list[CheckResult] = field(default_factory=list)
    stackable: int = 0
    queueable: int = 0

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def render(self) -> str:
        lines = [f"verify n={self.n}: stackable={self.stackable} queueable={self.queueable}"]
        for c in self.checks:
            mark = "PASS" if c.ok else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            lines.append(f"  [{mark}] {c.name}{suffix}")
        return "\n".join(lines)


def verify_bijection_suite(n: int) -> VerifyReport:
    """Run every exhaustive cross-check over S_n and report pass/fail.

    Covers: predicate vs. generic pattern scan, decomposition,
    realization <-> avoidance, Catalan counts, record-setter transfers,
    trace replay validity, profile coincidences, codec round trips, the
    bijection algebra, projection idempotence, peak removal/restoration,
    and cycle-lemma uniqueness (the latter capped at n <= 6 internally).
    """
    if not 0 <= n <= MAX_VERIFY_N:
        raise ValueError(f"n must be in 0..{MAX_VERIFY_N}")
    report = VerifyReport(n=n)

    def check(name: str, failures: list[str], detail: str = "") -> None:
        if failures:
            report.checks.append(CheckResult(name, False, "; ".join(failures[:3])))
        else:
            report.checks.append(CheckResult(name, True, detail))

    predicate_vs_scan: list[str] = []
    decomposition: list[str] = []
    stack_iff_312: list[str] = []
    queue_iff_321: list[str] = []
    transfers_are_records: list[str] = []
    replay_ok: list[str] = []
    profiles_coincide: list[str] = []
    round_trips: list[str] = []
    bijection: list[str] = []
    idempotents: list[str] = []

    n_stackable = 0
    n_queueable = 0
    stackit_image: set[Perm] = set()
    queueit_image: set[Perm] = set()

    for p in perms.all_permutations_of(n):
        a312 = perms.avoids_312(p)
        a321 = perms.avoids_321(p)
        if a312 != (not perms.contains_pattern(p, perms.PATTERN_312)):
            predicate_vs_scan.append(f"312 mismatch at {p}")
        if a321 != (not perms.contains_pattern(p, perms.PATTERN_321)):
            predicate_vs_scan.append(f"321 mismatch at {p}")
        decomp = perms.two_increasing_decomposition(p)
        if a321 != (decomp is not None):
            decomposition.append(f"decomposition mismatch at {p}")

        plain = machines.realize_with_stack(p, allow_xfer=False)
        fused = machines.realize_with_stack(p, allow_xfer=True)
        if (plain is not None) != a312 or (fused is not None) != a312:
            stack_iff_312.append(f"stackability mismatch at {p}")
        qtrace = machines.realize_with_queue(p)
        if (qtrace is not None) != a321:
            queue_iff_321.append(f"queueability mismatch at {p}")
        strace = machines.realize_with_set(p)
        if not machines.replay_trace(strace):
            replay_ok.append(f"set replay failed at {p}")

        if a312:
            n_stackable += 1
            assert plain is not None and fused is not None
            if not (machines.replay_trace(plain) and machines.replay_trace(fused)):
                replay_ok.append(f"stack replay failed at {p}")
            if fused.heights != strace.heights:
                profiles_coincide.append(f"stack/set profile differs at {p}")
            word = fused.step_word()
            if paths.decode_stackable(word) != p:
                round_trips.append(f"stack decode round trip failed at {p}")
            plain_path = machines.trace_height_profile(plain)
            if paths.remove_peaks(plain_path).word != word:
                round_trips.append(f"peak removal mismatch at {p}")
            q = paths.knuth_richards(p)
            if not perms.avoids_321(q) or paths.knuth_richards_inv(q) != p:
                bijection.append(f"bijection round trip failed at {p}")
        if a321:
            n_queueable += 1
            assert qtrace is not None
            if not machines.replay_trace(qtrace):
                replay_ok.append(f"queue replay failed at {p}")
            if qtrace.heights != strace.heights:
                profiles_coincide.append(f"queue/set profile differs at {p}")
            word = qtrace.step_word()
            if paths.decode_queueable(word) != p:
                round_trips.append(f"queue decode round trip failed at {p}")
            xfers = tuple(
                op.value for op in qtrace.ops if op.kind == machines.OP_XFER
            )
            records = tuple(p[i - 1] for i in perms.record_setters(p))
            if xfers != records:
                transfers_are_records.append(f"transfer set mismatch at {p}")

        si, qi = paths.stackit(p), paths.queueit(p)
        stackit_image.add(si)
        queueit_image.add(qi)
        if paths.stackit(si) != si or paths.queueit(qi) != qi:
            idempotents.append(f"idempotence fails at {p}")
        if not perms.avoids_312(si) or not perms.avoids_321(qi):
            idempotents.append(f"projection lands outside its class at {p}")
        if a312 and si != p:
            idempotents.append(f"stackit moves a stackable {p}")
        if a312 and qi != paths.knuth_richards(p):
            idempotents.append(f"queueit disagrees with the bijection at {p}")
        if a321 and qi != p:
            idempotents.append(f"queueit moves a queueable {p}")

    report.stackable = n_stackable
    report.queueable = n_queueable

    check("predicates agree with generic pattern scan", predicate_vs_scan)
    check("decomposition exists iff 321-avoiding", decomposition)
    check(
        "stack realization iff 312-avoiding",
        stack_iff_312,
        f"{n_stackable} stackable",
    )
    check(
        "queue realization iff 321-avoiding",
        queue_iff_321,
        f"{n_queueable} queueable",
    )
    cn = paths.catalan(n)
    check(
        "both classes have Catalan size",
        []
        if n_stackable == cn == n_queueable
        else [f"expected {cn}, got {n_stackable} and {n_queueable}"],
        f"catalan({n})={cn}",
    )
    check("transferred values are the record-setters", transfers_are_records)
    check("traces replay legally", replay_ok)
    check("lazy profiles coincide with the set profile", profiles_coincide)
    check("path codecs round-trip", round_trips)
    check("bijection and inverse compose to identity", bijection)
    check("projections idempotent, fixing their classes", idempotents)
    check(
        "projection images are exactly the avoidance classes",
        []
        if len(stackit_image) == cn and len(queueit_image) == cn
        else [f"image sizes {len(stackit_image)}, {len(queueit_image)}"],
    )

    peak_failures = []
    for path in paths.enumerate_dyck_paths(n):
        if paths.restore_peaks(paths.remove_peaks(path)).word != path.word:
            peak_failures.append(f"peak round trip failed at {path.word}")
    check("peak removal/restoration mutually inverse", peak_failures)

    if n <= 6:
        lemma_failures = []
        count = 0
        for pos in itertools.combinations(range(2 * n + 1), n + 1):
            terms = [-1] * (2 * n + 1)
            for i in pos:
                terms[i] = 1
            path = paths.cycle_lemma_canonical(terms)
            count += 1
            if path.klass != paths.CLASS_DYCK:
                lemma_failures.append(f"non-Dyck result for {terms}")
        check(
            "cycle lemma picks one rotation per ballot sequence",
            lemma_failures,
            f"{count} sequences",
        )

    return report
