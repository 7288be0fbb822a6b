"""Single-container machines: greedy stack, lazy queue, lazy set.

Each machine consumes the input stream 1,2,...,n and emits a target
permutation, recording a canonical trace of operations:

* ``IN v``   -- move the input front into the container,
* ``OUT v``  -- emit a value from the container,
* ``XFER v`` -- move the input front straight to the output.

"Lazy" is pinned operationally: an ``IN`` happens only when the next
needed output value lies deeper in the input, and then exactly the
values in front of it are moved in, after which the needed value is
``XFER``-ed.  This makes the canonical trace unique, makes the
direct-transferred values exactly the left-to-right maxima of the
target, and means canonical traces never emit a value immediately after
moving it in.

The height profile (container size after each operation) of a canonical
trace, read as U/D/H steps, is a peakless weak Dyck path; the pure
push/pop stack trace (``allow_xfer=False``) yields an ordinary Dyck path
of length 2n instead.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perms import Perm, validate_permutation

OP_IN = "IN"
OP_OUT = "OUT"
OP_XFER = "XFER"

STACK = "stack"
QUEUE = "queue"
SET = "set"


@dataclass(frozen=True)
class MachineOp:
    kind: str  # OP_IN | OP_OUT | OP_XFER
    value: int

    def render(self) -> str:
        return f"{self.kind} {self.value}"


@dataclass(frozen=True)
class MachineTrace:
    """A legal operation sequence together with its height profile."""

    ops: tuple[MachineOp, ...]
    container: str  # STACK | QUEUE | SET
    output: Perm
    heights: tuple[int, ...]

    def step_word(self) -> str:
        """The trace as a lattice-path word: IN->U, OUT->D, XFER->H."""
        trans = {OP_IN: "U", OP_OUT: "D", OP_XFER: "H"}
        return "".join(trans[op.kind] for op in self.ops)

    def render(self) -> str:
        """One op per line, then the height profile, comma separated."""
        lines = [op.render() for op in self.ops]
        lines.append(",".join(str(h) for h in self.heights))
        return "\n".join(lines)


def _make_trace(ops: list[MachineOp], container: str, output: list[int]) -> MachineTrace:
    heights = []
    size = 0
    for op in ops:
        if op.kind == OP_IN:
            size += 1
        elif op.kind == OP_OUT:
            size -= 1
        heights.append(size)
    assert size == 0, "container must be empty at the end of a trace"
    return MachineTrace(
        ops=tuple(ops),
        container=container,
        output=tuple(output),
        heights=tuple(heights),
    )


def realize_with_stack(p: Perm, allow_xfer: bool = False) -> MachineTrace | None:
    """The canonical stack trace producing ``p``, or None if ``p`` has a 312.

    With ``allow_xfer=False`` this is the unique push/pop realization
    (push-then-immediately-pop is how the next needed input value gets
    emitted).  With ``allow_xfer=True`` the next needed value, when still
    in the input, is transferred directly after moving the values in
    front of it onto the stack; no value is ever emitted straight after
    being moved in, which also minimizes the operation count.
    """
    trace, _ = _stack_run(validate_permutation(p), allow_xfer)
    return trace


def stack_block_witness(p: Perm) -> tuple[int, int, int] | None:
    """The 312 occurrence that blocks the stack, as values in position order.

    Returns ``(a, b, c)`` with a before b before c in ``p`` and
    b < c < a: ``a`` was emitted early, burying ``c`` on top of ``b``.
    None iff ``p`` is stackable.
    """
    _, witness = _stack_run(validate_permutation(p), allow_xfer=True)
    return witness


def _stack_run(
    p: Perm, allow_xfer: bool
) -> tuple[MachineTrace | None, tuple[int, int, int] | None]:
    ops: list[MachineOp] = []
    out: list[int] = []
    stack: list[int] = []
    next_in = 1
    for target in p:
        if target >= next_in:
            # Still in the input: uncover it, then pop or transfer it.
            while next_in < target:
                stack.append(next_in)
                ops.append(MachineOp(OP_IN, next_in))
                next_in += 1
            next_in += 1
            if allow_xfer:
                ops.append(MachineOp(OP_XFER, target))
            else:
                ops.append(MachineOp(OP_IN, target))
                ops.append(MachineOp(OP_OUT, target))
            out.append(target)
        else:
            top = stack[-1] if stack else None
            if top != target:
                # top buries target; some emitted value larger than top
                # forced both onto the stack.
                assert top is not None
                culprit = next(v for v in out if v > top)
                return None, (culprit, target, top)
            stack.pop()
            ops.append(MachineOp(OP_OUT, target))
            out.append(target)
    return _make_trace(ops, STACK, out), None


def realize_with_queue(p: Perm) -> MachineTrace | None:
    """The canonical lazy queue trace producing ``p``, or None on a 321.

    Values enter the queue in input order and leave in that same order;
    the record-setting values of ``p`` are exactly the ones transferred
    directly.  The lazy trace minimizes the aggregate time values spend
    in the queue over all legal queue traces for ``p``.
    """
    trace, _ = _queue_run(validate_permutation(p))
    return trace


def queue_block_witness(p: Perm) -> tuple[int, int, int] | None:
    """The decreasing triple that blocks the queue, in position order.

    Returns ``(a, b, c)`` appearing in that order in ``p`` with
    a > b > c: digging for ``a`` queued ``b`` behind schedule and ``c``
    sits at the head when ``b`` is wanted.  None iff ``p`` is queueable.
    """
    _, witness = _queue_run(validate_permutation(p))
    return witness


def _queue_run(p: Perm) -> tuple[MachineTrace | None, tuple[int, int, int] | None]:
    ops: list[MachineOp] = []
    out: list[int] = []
    queue: list[int] = []
    head = 0  # queue[head:] is the live content
    next_in = 1
    for target in p:
        if target >= next_in:
            while next_in < target:
                queue.append(next_in)
                ops.append(MachineOp(OP_IN, next_in))
                next_in += 1
            next_in += 1
            ops.append(MachineOp(OP_XFER, target))
            out.append(target)
        else:
            front = queue[head] if head < len(queue) else None
            if front != target:
                assert front is not None
                culprit = next(v for v in out if v > target)
                return None, (culprit, target, front)
            head += 1
            ops.append(MachineOp(OP_OUT, target))
            out.append(target)
    return _make_trace(ops, QUEUE, out), None


def realize_with_set(p: Perm) -> MachineTrace:
    """The lazy set trace producing ``p``; always succeeds.

    The input side is identical to the lazy queue (record-setters are
    transferred, everything else is moved in as late as possible), but
    emission retrieves any requested value.  The height profile is the
    set-size record of ``p``.
    """
    p = validate_permutation(p)
    ops: list[MachineOp] = []
    out: list[int] = []
    pending: set[int] = set()
    next_in = 1
    for target in p:
        if target >= next_in:
            while next_in < target:
                pending.add(next_in)
                ops.append(MachineOp(OP_IN, next_in))
                next_in += 1
            next_in += 1
            ops.append(MachineOp(OP_XFER, target))
        else:
            pending.remove(target)
            ops.append(MachineOp(OP_OUT, target))
        out.append(target)
    return _make_trace(ops, SET, out)


def trace_height_profile(trace: MachineTrace):
    """The trace's height profile as a classified lattice path.

    Canonical traces with transfers give peakless weak Dyck paths; pure
    push/pop stack traces give Dyck paths of length 2n.
    """
    from .paths import classify_path  # deferred: paths imports machines

    return classify_path(trace.step_word())


def storage_cost(trace: MachineTrace) -> int:
    """Total time spent by values inside the container.

    Sum over values of (op index of OUT) - (op index of IN); transferred
    values contribute nothing.
    """
    entered: dict[int, int] = {}
    cost = 0
    for idx, op in enumerate(trace.ops):
        if op.kind == OP_IN:
            entered[op.value] = idx
        elif op.kind == OP_OUT:
            cost += idx - entered[op.value]
    return cost


def replay_trace(trace: MachineTrace) -> bool:
    """Re-run ``trace`` against its stated container kind and check it.

    Verifies every step is legal for input stream 1..n, that the output
    matches, and that recorded heights are the actual container sizes
    (hence nonnegative, ending at 0).  Traces that use transfers must
    additionally never emit a value straight after moving it in; pure
    push/pop traces are exempt, since there push-then-pop is the only
    way to emit the input front.
    """
    uses_transfers = any(op.kind == OP_XFER for op in trace.ops)
    n = len(trace.output)
    contents: list[int] = []
    out: list[int] = []
    next_in = 1
    size_record = []
    prev = None
    for op in trace.ops:
        if op.kind == OP_IN:
            if op.value != next_in:
                return False
            contents.append(op.value)
            next_in += 1
        elif op.kind == OP_XFER:
            if op.value != next_in:
                return False
            out.append(op.value)
            next_in += 1
        elif op.kind == OP_OUT:
            if not contents:
                return False
            if trace.container == STACK:
                if contents[-1] != op.value:
                    return False
                contents.pop()
            elif trace.container == QUEUE:
                if contents[0] != op.value:
                    return False
                contents.pop(0)
            else:  # SET: any member may be requested
                if op.value not in contents:
                    return False
                contents.remove(op.value)
            out.append(op.value)
            if (
                uses_transfers
                and prev is not None
                and prev.kind == OP_IN
                and prev.value == op.value
            ):
                return False  # transfer-mode traces never emit right after moving in
        else:
            return False
        size_record.append(len(contents))
        prev = op
    return (
        not contents
        and next_in == n + 1
        and tuple(out) == trace.output
        and tuple(size_record) == trace.heights
    )
