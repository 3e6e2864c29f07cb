#!/usr/bin/env python3
"""Scaling measurement for the linear-time forest recognizer.

Builds paths and three-legged spiders of increasing size, times the
recognizer alone (construction excluded), and fits the log-log slope.
A slope near 1.0 confirms linear behavior.

Usage: python scripts/forest_timing.py [--max-size 1000000]
"""

import argparse
import math
import sys
import time

from equilab.graphs import make_graph
from equilab.recognizers import recognize_equistarable_forest


def big_path(n: int):
    labels = tuple(str(i) for i in range(n))
    return make_graph(labels, [(i, i + 1) for i in range(n - 1)])


def big_spider(leg_count: int, leg_len: int):
    """Star center with leg_count paths of leg_len vertices hanging off it."""
    n = 1 + leg_count * leg_len
    labels = tuple(str(i) for i in range(n))
    pairs = []
    v = 1
    for _ in range(leg_count):
        prev = 0
        for _ in range(leg_len):
            pairs.append((prev, v))
            prev = v
            v += 1
    return make_graph(labels, pairs)


def timed(g, repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        recognize_equistarable_forest(g)
        best = min(best, time.perf_counter() - t0)
    return best


def fit_slope(sizes, times) -> float:
    xs = [math.log(s) for s in sizes]
    ys = [math.log(t) for t in times]
    n = len(xs)
    mx = sum(xs) / n
    my = sum(ys) / n
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
        (x - mx) ** 2 for x in xs
    )


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=1_000_000)
    args = ap.parse_args()
    sizes = []
    s = args.max_size // 16
    while s <= args.max_size:
        sizes.append(s)
        s *= 2
    for builder, name in ((big_path, "path"),
                          (lambda n: big_spider(3, n // 3), "spider")):
        times = []
        for n in sizes:
            g = builder(n)
            dt = timed(g)
            times.append(dt)
            print(f"{name:8} n={g.n:>8}  {dt * 1000:8.2f} ms")
        print(f"{name:8} fitted exponent: {fit_slope(sizes, times):.3f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
