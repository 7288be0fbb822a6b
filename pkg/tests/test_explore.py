from __future__ import annotations

import random

import pytest

from permdek import explore, perms
from permdek.explore import (
    MachineConfig,
    all_permutations,
    count_obtainable,
    longest_decreasing_run_under,
    obtain_witness,
    obtainable,
    replay_witness,
    verify_bijection_suite,
)
from permdek.paths import catalan

from .conftest import perms_of

ONE_STACK = MachineConfig(("stack",))
ONE_QUEUE = MachineConfig(("queue",))
ONE_DEQUE = MachineConfig(("deque",))
TWO_STACKS = MachineConfig(("stack", "stack"))
TWO_QUEUES = MachineConfig(("queue", "queue"))
STACK_QUEUE = MachineConfig(("stack", "queue"))

ALL_CONFIGS = [ONE_STACK, ONE_QUEUE, ONE_DEQUE, TWO_STACKS, TWO_QUEUES, STACK_QUEUE]


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            MachineConfig(())
        with pytest.raises(ValueError):
            MachineConfig(("stack", "stack", "stack"))
        with pytest.raises(ValueError):
            MachineConfig(("heap",))

    def test_labels(self):
        assert TWO_STACKS.label() == "stack+stack+xfer"
        assert MachineConfig(("queue",), xfer=False).label() == "queue"


class TestAllPermutations:
    def test_sizes_and_extremes(self):
        assert list(all_permutations(0)) == [()]
        s3 = list(all_permutations(3))
        assert len(s3) == 6
        assert s3[0] == (1, 2, 3) and s3[-1] == (3, 2, 1)
        assert sum(1 for _ in all_permutations(8)) == 40320

    def test_ranges_partition_the_stream(self):
        whole = list(all_permutations(5))
        chunks = [list(all_permutations(5, start, start + 30)) for start in range(0, 120, 30)]
        assert [p for chunk in chunks for p in chunk] == whole

    def test_guard(self):
        with pytest.raises(ValueError):
            all_permutations(11)


class TestObtainable:
    def test_spec_examples(self):
        assert not obtainable(ONE_STACK, (3, 1, 2))
        assert obtainable(TWO_STACKS, (3, 1, 2))
        assert not obtainable(TWO_QUEUES, (4, 3, 2, 1))

    def test_two_stack_witness_replays(self):
        ops = obtain_witness(TWO_STACKS, (3, 1, 2))
        assert ops is not None
        assert replay_witness(TWO_STACKS, (3, 1, 2), ops)
        kinds = [op[0] for op in ops]
        assert kinds == ["IN", "IN", "XFER", "OUT", "OUT"]

    def test_guard(self):
        with pytest.raises(ValueError):
            obtainable(ONE_STACK, tuple(range(1, 11)))

    @pytest.mark.parametrize("n", range(0, 7))
    def test_single_containers_match_predicates(self, n):
        for p in perms_of(n):
            assert obtainable(ONE_STACK, p) == perms.avoids_312(p)
            assert obtainable(ONE_QUEUE, p) == perms.avoids_321(p)

    @pytest.mark.parametrize("n", range(0, 8))
    def test_deque_dominates_both_single_containers(self, n):
        for p in perms_of(n):
            if perms.avoids_312(p) or perms.avoids_321(p):
                assert obtainable(ONE_DEQUE, p)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_queue_without_transfers_obtains_only_identity(self, n):
        cfg = MachineConfig(("queue",), xfer=False)
        got = [p for p in perms_of(n) if obtainable(cfg, p)]
        assert got == [tuple(range(1, n + 1))]

    @pytest.mark.parametrize("n", range(0, 6))
    def test_stack_class_unchanged_by_transfers(self, n):
        cfg = MachineConfig(("stack",), xfer=False)
        for p in perms_of(n):
            assert obtainable(cfg, p) == perms.avoids_312(p)

    def test_witnesses_replay_everywhere(self):
        for config in ALL_CONFIGS:
            for n in range(0, 5):
                for p in perms_of(n):
                    ops = obtain_witness(config, p)
                    if ops is None:
                        assert not obtainable(config, p)
                    else:
                        assert obtainable(config, p)
                        assert replay_witness(config, p, ops)


class TestSearchModes:
    def test_memoized_and_plain_agree_exhaustively_small(self):
        for config in ALL_CONFIGS:
            for n in range(0, 5):
                for p in perms_of(n):
                    expected = obtainable(config, p)
                    assert obtainable(config, p, memo=False) == expected

    def test_canonicalization_choice_never_changes_the_answer(self):
        rng = random.Random(20250811)
        configs = [TWO_STACKS, TWO_QUEUES, STACK_QUEUE, ONE_DEQUE,
                   MachineConfig(("deque", "deque"))]
        for _ in range(1000):
            n = rng.randint(1, 7)
            p = tuple(rng.sample(range(1, n + 1), n))
            config = rng.choice(configs)
            base = obtainable(config, p)
            assert obtainable(config, p, canonicalize=False) == base


# Regression tables: computed by this engine once, then pinned.  The
# two-queue row has an independent oracle (see below); the deque row is
# cross-checked against the solitaire solver in test_dek.py.
PINNED_COUNTS = {
    ("stack", "stack"): [1, 1, 2, 6, 23, 103, 513, 2760],
    ("stack", "queue"): [1, 1, 2, 6, 24, 118, 668, 4150],
    ("queue", "queue"): [1, 1, 2, 6, 23, 103, 513, 2761],
    ("deque",): [1, 1, 2, 6, 24, 116, 634, 3762],
}


class TestCounts:
    @pytest.mark.parametrize("n", range(0, 6))
    def test_single_container_counts_are_catalan(self, n):
        assert count_obtainable(ONE_STACK, n).count == catalan(n)
        assert count_obtainable(ONE_QUEUE, n).count == catalan(n)

    @pytest.mark.parametrize("kinds", sorted(PINNED_COUNTS))
    def test_pinned_tables_up_to_n6(self, kinds):
        config = MachineConfig(kinds)
        got = [count_obtainable(config, n).count for n in range(0, 7)]
        assert got == PINNED_COUNTS[kinds][:7]

    @pytest.mark.parametrize("n", range(0, 6))
    def test_two_queues_match_decreasing_run_oracle(self, n):
        expected = sum(1 for p in perms_of(n) if longest_decreasing_run_under(p, 4))
        assert count_obtainable(TWO_QUEUES, n).count == expected

    @pytest.mark.parametrize("n", range(0, 7))
    def test_adding_a_container_is_monotone(self, n):
        base_stack = count_obtainable(ONE_STACK, n).count
        base_queue = count_obtainable(ONE_QUEUE, n).count
        assert count_obtainable(TWO_STACKS, n).count >= base_stack
        assert count_obtainable(STACK_QUEUE, n).count >= max(base_stack, base_queue)
        assert count_obtainable(TWO_QUEUES, n).count >= base_queue

    def test_count_guard(self):
        with pytest.raises(ValueError):
            count_obtainable(ONE_STACK, 9)


class TestDecreasingRunOracle:
    def test_examples(self):
        assert longest_decreasing_run_under((1, 2, 3), 2)
        assert not longest_decreasing_run_under((3, 2, 1), 3)
        assert longest_decreasing_run_under((3, 2, 1), 4)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_matches_pattern_scan(self, n):
        for p in perms_of(n):
            assert longest_decreasing_run_under(p, 3) == perms.avoids_321(p)
            assert longest_decreasing_run_under(p, 4) == (
                not perms.contains_pattern(p, (4, 3, 2, 1))
            )


class TestVerifySuite:
    def test_n0_vacuous_pass(self):
        report = verify_bijection_suite(0)
        assert report.all_ok

    def test_n4(self):
        report = verify_bijection_suite(4)
        assert report.all_ok
        assert report.stackable == report.queueable == 14
        assert "PASS" in report.render()

    def test_n5_counts(self):
        report = verify_bijection_suite(5)
        assert report.all_ok
        assert report.stackable == report.queueable == 42

    def test_guard(self):
        with pytest.raises(ValueError):
            verify_bijection_suite(9)
