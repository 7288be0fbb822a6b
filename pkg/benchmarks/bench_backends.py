#!/usr/bin/env python3
"""Benchmark the pure-Python search kernels against the compiled ones.

Runs the sweeps that dominate the exhaustive suites -- solitaire
winnability over all of S_n and multi-container obtainability counts --
on both backends, checks they agree, and prints a comparison table.

Usage:
    python3 benchmarks/bench_backends.py [--max-dek 8] [--max-config 7]
"""
from __future__ import annotations

import argparse
import itertools
import time

from permdek._core import pure

try:
    from permdek._core import _speedups as compiled
except ImportError:
    compiled = None


def perms_of(n: int):
    return itertools.permutations(range(1, n + 1))


def time_call(fn) -> tuple[float, int]:
    start = time.perf_counter()
    result = fn()
    return time.perf_counter() - start, result


def bench_dek(backend, n: int) -> tuple[float, int]:
    return time_call(lambda: sum(1 for p in perms_of(n) if backend.dek_winnable(p)))


def bench_config(backend, kinds: tuple[str, ...], n: int) -> tuple[float, int]:
    return time_call(
        lambda: sum(1 for p in perms_of(n) if backend.config_obtainable(p, kinds, True))
    )


def row(label: str, pure_s: float, fast_s: float | None) -> str:
    if fast_s is None:
        return f"{label:34s} {pure_s:9.3f}s {'-':>10s} {'-':>8s}"
    return f"{label:34s} {pure_s:9.3f}s {fast_s:9.3f}s {pure_s / fast_s:7.1f}x"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-dek", type=int, default=8)
    parser.add_argument("--max-config", type=int, default=7)
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels not built; timing the pure backend only\n")
    print(f"{'sweep':34s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")

    for n in range(6, args.max_dek + 1):
        pure_s, count = bench_dek(pure, n)
        fast_s = None
        if compiled is not None:
            fast_s, fast_count = bench_dek(compiled, n)
            assert fast_count == count, "backends disagree"
        print(row(f"solitaire winnable, all of S_{n}", pure_s, fast_s))

    for kinds in (("stack", "stack"), ("stack", "queue"), ("queue", "queue"), ("deque",)):
        n = args.max_config
        pure_s, count = bench_config(pure, kinds, n)
        fast_s = None
        if compiled is not None:
            fast_s, fast_count = bench_config(compiled, kinds, n)
            assert fast_count == count, "backends disagree"
        print(row(f"{'+'.join(kinds)} obtainable, all of S_{n}", pure_s, fast_s))


if __name__ == "__main__":
    main()
