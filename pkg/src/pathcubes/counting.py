"""Exact counts for independent subsets of path powers and their Hasse diagrams.

Notation used throughout (vertices are 1-based, v_1 .. v_n):

    p(n, k)   independent k-subsets of P_n^(h)
    p(n)      all independent subsets of P_n^(h)
    T(k, i)   independent k-subsets containing v_i
    F_m       the h-Fibonacci sequence, F_m = 1 for m <= h+1
    H(n)      edges of the inclusion Hasse diagram

Every value is a Python int, so nothing overflows.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Tuple


@dataclass(frozen=True)
class PathPower:
    """The graph P_n^(h): n vertices, v_i ~ v_j whenever 0 < |i - j| <= h."""

    n: int
    h: int

    def __post_init__(self):
        if self.n < 0 or self.h < 0:
            raise ValueError(f"n and h must be nonnegative, got n={self.n}, h={self.h}")

    def adjacent(self, i: int, j: int) -> bool:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"vertex index out of range 1..{self.n}: {i}, {j}")
        return i != j and abs(j - i) <= self.h


def _check_nonneg(**kw):
    for name, value in kw.items():
        if value < 0:
            raise ValueError(f"{name} must be nonnegative, got {value}")


def binomial(a: int, k: int) -> int:
    """C(a, k), clamped to 0 whenever a < 0 or k > a."""
    if k < 0 or a < 0 or k > a:
        return 0
    return math.comb(a, k)


def max_independent_size(p: PathPower) -> int:
    # ceil(n / (h+1)) without floats
    return -(-p.n // (p.h + 1))


def count_independent_k(p: PathPower, k: int) -> int:
    _check_nonneg(k=k)
    return binomial(p.n - p.h * k + p.h, k)


def count_independent_closed(p: PathPower) -> int:
    return sum(count_independent_k(p, k) for k in range(max_independent_size(p) + 1))


def count_independent_recurrence(p: PathPower) -> int:
    """p(n) via p(n) = p(n-1) + p(n-h-1), seeded with p(m) = m+1 for m <= h+1.

    Runs bottom-up keeping only the last h+1 values.
    """
    n, h = p.n, p.h
    if n <= h + 1:
        return n + 1
    # holds p(m-h-1) .. p(m-1) at the top of each step
    window = deque((m + 1 for m in range(1, h + 2)), maxlen=h + 1)
    for _ in range(h + 2, n + 1):
        window.append(window[-1] + window[0])
    return window[-1]


def extended_count_k(n: int, h: int, k: int) -> int:
    """p(n, k) with negative n clamped to n = 0."""
    _check_nonneg(h=h, k=k)
    return count_independent_k(PathPower(max(n, 0), h), k)


def extended_count(n: int, h: int) -> int:
    """p(n) with negative n clamped to n = 0 (so the value is 1)."""
    _check_nonneg(h=h)
    if n < 0:
        return 1
    return count_independent_closed(PathPower(n, h))


def count_containing(p: PathPower, k: int, i: int) -> int:
    """Independent k-subsets of P_n^(h) that contain v_i.

    Removing v_i leaves an r-subset of v_1..v_{i-h-1} and a (k-1-r)-subset of
    a block isomorphic to P_{n-i-h}^(h); both sides use the clamped counts.
    """
    if not 1 <= i <= p.n:
        raise ValueError(f"vertex index {i} outside 1..{p.n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    left, right = i - p.h - 1, p.n - i - p.h
    return sum(
        extended_count_k(left, p.h, r) * extended_count_k(right, p.h, k - 1 - r)
        for r in range(k)
    )


@dataclass(frozen=True)
class SequenceWindow:
    """The first len(values) terms of the h-Fibonacci sequence, indexed from 1."""

    h: int
    values: Tuple[int, ...]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= len(self.values):
            raise IndexError(f"term {m} outside window 1..{len(self.values)}")
        return self.values[m - 1]


def fibonacci_window(h: int, length: int) -> SequenceWindow:
    _check_nonneg(h=h, length=length)
    values = []
    for m in range(1, length + 1):
        if m <= h + 1:
            values.append(1)
        else:
            values.append(values[m - 2] + values[m - h - 2])
    return SequenceWindow(h, tuple(values))


def h_fibonacci(h: int, m: int) -> int:
    if m < 1:
        raise ValueError(f"h-Fibonacci terms start at m=1, got {m}")
    return fibonacci_window(h, m)[m]


def edges_rank_weighted(p: PathPower) -> int:
    """H(n) as sum_k k * p(n, k): each k-subset covers exactly k smaller ones."""
    return sum(k * count_independent_k(p, k) for k in range(1, max_independent_size(p) + 1))


def edges_convolution(p: PathPower) -> int:
    """H(n) as the self-convolution sum_{i=1..n} F_i * F_{n-i+1}."""
    f = fibonacci_window(p.h, p.n)
    return sum(f[i] * f[p.n - i + 1] for i in range(1, p.n + 1))


def independent_sequence(h: int, limit: int) -> list:
    """p(0) .. p(limit-1) for fixed h."""
    _check_nonneg(h=h, limit=limit)
    out = []
    for n in range(limit):
        out.append(n + 1 if n <= h + 1 else out[n - 1] + out[n - h - 1])
    return out


def edges_sequence(h: int, limit: int) -> list:
    """H(0) .. H(limit-1) for fixed h, via convolution."""
    _check_nonneg(h=h, limit=limit)
    f = fibonacci_window(h, max(limit - 1, 0))
    return [sum(f[i] * f[n - i + 1] for i in range(1, n + 1)) for n in range(limit)]


@dataclass(frozen=True)
class CountTable:
    """All counts for one P_n^(h), filled from the closed forms."""

    params: PathPower
    by_size: Tuple[int, ...]
    total: int
    containing: Dict[Tuple[int, int], int] = field(repr=False)
    edges: int


def count_table(p: PathPower) -> CountTable:
    kmax = max_independent_size(p)
    containing = {
        (k, i): count_containing(p, k, i)
        for k in range(1, kmax + 1)
        for i in range(1, p.n + 1)
    }
    return CountTable(
        params=p,
        by_size=tuple(count_independent_k(p, k) for k in range(kmax + 1)),
        total=count_independent_closed(p),
        containing=containing,
        edges=edges_rank_weighted(p),
    )
