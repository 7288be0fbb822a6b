from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permdek import machines, perms
from permdek.machines import (
    OP_IN,
    OP_OUT,
    OP_XFER,
    MachineOp,
    queue_block_witness,
    realize_with_queue,
    realize_with_set,
    realize_with_stack,
    replay_trace,
    stack_block_witness,
    storage_cost,
    trace_height_profile,
)

from .conftest import perms_of

perm_lists = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)

WORKED_STACKABLE = (2, 1, 5, 7, 6, 4, 3)
WORKED_QUEUEABLE = (2, 1, 5, 7, 3, 4, 6)


def kinds_values(trace):
    return [(op.kind, op.value) for op in trace.ops]


class TestStack:
    def test_worked_example_plain(self):
        t = realize_with_stack(WORKED_STACKABLE, allow_xfer=False)
        assert kinds_values(t) == [
            (OP_IN, 1), (OP_IN, 2), (OP_OUT, 2), (OP_OUT, 1),
            (OP_IN, 3), (OP_IN, 4), (OP_IN, 5), (OP_OUT, 5),
            (OP_IN, 6), (OP_IN, 7), (OP_OUT, 7), (OP_OUT, 6),
            (OP_OUT, 4), (OP_OUT, 3),
        ]
        assert t.heights[-1] == 0
        assert t.step_word() == "UUDDUUUDUUDDDD"

    def test_worked_example_with_transfers(self):
        t = realize_with_stack(WORKED_STACKABLE, allow_xfer=True)
        assert kinds_values(t) == [
            (OP_IN, 1), (OP_XFER, 2), (OP_OUT, 1), (OP_IN, 3), (OP_IN, 4),
            (OP_XFER, 5), (OP_IN, 6), (OP_XFER, 7), (OP_OUT, 6),
            (OP_OUT, 4), (OP_OUT, 3),
        ]
        assert t.heights == (1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0)

    def test_forbidden_pattern(self):
        assert realize_with_stack((3, 1, 2), allow_xfer=False) is None
        assert realize_with_stack((3, 1, 2), allow_xfer=True) is None
        assert stack_block_witness((3, 1, 2)) == (3, 1, 2)

    def test_witness_is_a_312_occurrence(self):
        for n in range(0, 7):
            for p in perms_of(n):
                w = stack_block_witness(p)
                if w is None:
                    assert perms.avoids_312(p)
                    continue
                a, b, c = w
                ia, ib, ic = p.index(a), p.index(b), p.index(c)
                assert ia < ib < ic and b < c < a

    @pytest.mark.parametrize("n", range(0, 9))
    def test_present_iff_312_avoiding(self, n):
        for p in perms_of(n):
            stackable = perms.avoids_312(p)
            for xfer in (False, True):
                t = realize_with_stack(p, allow_xfer=xfer)
                assert (t is not None) == stackable
                if t is not None:
                    assert t.output == p
                    assert replay_trace(t)


class TestQueue:
    def test_worked_example(self):
        t = realize_with_queue(WORKED_QUEUEABLE)
        assert kinds_values(t) == [
            (OP_IN, 1), (OP_XFER, 2), (OP_OUT, 1), (OP_IN, 3), (OP_IN, 4),
            (OP_XFER, 5), (OP_IN, 6), (OP_XFER, 7), (OP_OUT, 3),
            (OP_OUT, 4), (OP_OUT, 6),
        ]
        assert t.heights == (1, 1, 0, 1, 2, 2, 3, 3, 2, 1, 0)

    def test_decreasing_triple_fails(self):
        assert realize_with_queue((3, 2, 1)) is None
        assert queue_block_witness((3, 2, 1)) == (3, 2, 1)

    def test_identity_is_all_transfers(self):
        for n in (0, 1, 4):
            t = realize_with_queue(tuple(range(1, n + 1)))
            assert all(op.kind == OP_XFER for op in t.ops)
            assert t.heights == (0,) * n

    def test_witness_is_a_321_occurrence(self):
        for n in range(0, 7):
            for p in perms_of(n):
                w = queue_block_witness(p)
                if w is None:
                    assert perms.avoids_321(p)
                    continue
                a, b, c = w
                ia, ib, ic = p.index(a), p.index(b), p.index(c)
                assert ia < ib < ic and a > b > c

    @pytest.mark.parametrize("n", range(0, 9))
    def test_present_iff_321_avoiding_and_transfers_records(self, n):
        for p in perms_of(n):
            t = realize_with_queue(p)
            assert (t is not None) == perms.avoids_321(p)
            if t is not None:
                assert t.output == p
                assert replay_trace(t)
                xfers = tuple(op.value for op in t.ops if op.kind == OP_XFER)
                records = tuple(p[i - 1] for i in perms.record_setters(p))
                assert xfers == records


class TestSet:
    def test_312_example(self):
        t = realize_with_set((3, 1, 2))
        assert kinds_values(t) == [
            (OP_IN, 1), (OP_IN, 2), (OP_XFER, 3), (OP_OUT, 1), (OP_OUT, 2),
        ]
        assert t.heights == (1, 2, 2, 1, 0)

    def test_identity(self):
        t = realize_with_set((1, 2, 3))
        assert all(op.kind == OP_XFER for op in t.ops)
        assert t.heights == (0, 0, 0)

    def test_coincides_with_stack_on_stackables(self):
        s = realize_with_stack(WORKED_STACKABLE, allow_xfer=True)
        t = realize_with_set(WORKED_STACKABLE)
        assert [op.kind for op in t.ops] == [op.kind for op in s.ops]
        assert t.heights == s.heights

    @pytest.mark.parametrize("n", range(0, 9))
    def test_profile_coincidences(self, n):
        for p in perms_of(n):
            t = realize_with_set(p)
            assert t.output == p
            assert replay_trace(t)
            if perms.avoids_312(p):
                assert realize_with_stack(p, True).heights == t.heights
            if perms.avoids_321(p):
                assert realize_with_queue(p).heights == t.heights


class TestProfileAndCost:
    def test_profile_words(self):
        plain = realize_with_stack(WORKED_STACKABLE, allow_xfer=False)
        assert trace_height_profile(plain).word == "UUDDUUUDUUDDDD"
        fused = realize_with_stack(WORKED_STACKABLE, allow_xfer=True)
        path = trace_height_profile(fused)
        assert path.word == "UHDUUHUHDDD"
        assert path.klass == "peakless_weak_dyck"
        ident = realize_with_queue((1, 2, 3))
        assert trace_height_profile(ident).word == "HHH"

    def test_storage_cost_examples(self):
        assert storage_cost(realize_with_queue((1, 2, 3))) == 0
        assert storage_cost(realize_with_set((3, 1, 2))) == 6

    @given(perm_lists)
    def test_storage_cost_nonnegative(self, entries):
        assert storage_cost(realize_with_set(tuple(entries))) >= 0


def all_stack_traces(p):
    """Every legal stack-with-transfers op sequence producing p."""
    n = len(p)

    def go(i, stack, j, ops):
        if j == n:
            if not stack:
                yield list(ops)
            return
        need = p[j]
        if stack and stack[-1] == need:
            ops.append(MachineOp(OP_OUT, need))
            yield from go(i, stack[:-1], j + 1, ops)
            ops.pop()
        if i < n and i + 1 == need:
            ops.append(MachineOp(OP_XFER, need))
            yield from go(i + 1, stack, j + 1, ops)
            ops.pop()
        if i < n:
            ops.append(MachineOp(OP_IN, i + 1))
            yield from go(i + 1, stack + (i + 1,), j, ops)
            ops.pop()

    yield from go(0, (), 0, [])


def all_queue_traces(p):
    """Every legal queue-with-transfers op sequence producing p."""
    n = len(p)

    def go(i, queue, j, ops):
        if j == n:
            if not queue:
                yield list(ops)
            return
        need = p[j]
        if queue and queue[0] == need:
            ops.append(MachineOp(OP_OUT, need))
            yield from go(i, queue[1:], j + 1, ops)
            ops.pop()
        if i < n and i + 1 == need:
            ops.append(MachineOp(OP_XFER, need))
            yield from go(i + 1, queue, j + 1, ops)
            ops.pop()
        if i < n:
            ops.append(MachineOp(OP_IN, i + 1))
            yield from go(i + 1, queue + (i + 1,), j, ops)
            ops.pop()

    yield from go(0, (), 0, [])


def cost_of(ops):
    entered = {}
    total = 0
    for idx, op in enumerate(ops):
        if op.kind == OP_IN:
            entered[op.value] = idx
        elif op.kind == OP_OUT:
            total += idx - entered[op.value]
    return total


@pytest.mark.parametrize("n", range(0, 7))
def test_canonical_stack_trace_minimizes_op_count(n):
    for p in perms_of(n):
        canonical = realize_with_stack(p, allow_xfer=True)
        if canonical is None:
            continue
        best = min(len(ops) for ops in all_stack_traces(p))
        assert len(canonical.ops) == best


@pytest.mark.parametrize("n", range(0, 7))
def test_lazy_queue_trace_minimizes_storage_cost(n):
    for p in perms_of(n):
        canonical = realize_with_queue(p)
        if canonical is None:
            continue
        best = min(cost_of(ops) for ops in all_queue_traces(p))
        assert storage_cost(canonical) == best


def test_lazy_queue_minimality_spec_example_n7():
    p = (2, 1, 5, 7, 3, 4, 6)
    canonical = realize_with_queue(p)
    best = min(cost_of(ops) for ops in all_queue_traces(p))
    assert storage_cost(canonical) == best


def test_render_trace():
    t = realize_with_set((3, 1, 2))
    assert t.render().splitlines() == [
        "IN 1",
        "IN 2",
        "XFER 3",
        "OUT 1",
        "OUT 2",
        "1,2,2,1,0",
    ]
