"""Brute-force ground truth.

Scans all 2^n bitmasks and tests adjacency directly: v_i and v_j clash when
0 < |j - i| <= h. Nothing here touches the closed forms or the enumerator.
Bit i-1 of a mask stands for v_i.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .counting import PathPower
from .errors import CapacityError

COUNT_CAP = 24
EDGE_CAP = 20


def _independent(mask: int, h: int) -> bool:
    # a pair at distance d <= h shows up as an overlap of mask with mask >> d
    for d in range(1, h + 1):
        if mask & (mask >> d):
            return False
    return True


def _check(p: PathPower, cap: int):
    if p.n > cap:
        raise CapacityError(p.n, cap, what="oracle")


@lru_cache(maxsize=32)
def _scan(n: int, h: int):
    by_size = Counter()
    containing = Counter()
    for mask in range(1 << n):
        if not _independent(mask, h):
            continue
        k = bin(mask).count("1")
        by_size[k] += 1
        for i in range(1, n + 1):
            if mask >> (i - 1) & 1:
                containing[k, i] += 1
    return by_size, containing


def brute_count(p: PathPower) -> int:
    _check(p, COUNT_CAP)
    return sum(_scan(p.n, p.h)[0].values())


def brute_count_k(p: PathPower, k: int) -> int:
    _check(p, COUNT_CAP)
    return _scan(p.n, p.h)[0][k]


def brute_count_containing(p: PathPower, k: int, i: int) -> int:
    _check(p, COUNT_CAP)
    if not 1 <= i <= p.n:
        raise ValueError(f"vertex index {i} outside 1..{p.n}")
    return _scan(p.n, p.h)[1][k, i]


def brute_subsets(p: PathPower) -> list:
    """Every independent subset as a b_1..b_n string, in mask order (unsorted)."""
    _check(p, COUNT_CAP)
    return [
        "".join("1" if mask >> i & 1 else "0" for i in range(p.n))
        for mask in range(1 << p.n)
        if _independent(mask, p.h)
    ]


def brute_edge_count(p: PathPower) -> int:
    """Pairs (S, S + {v}) with both sides independent."""
    _check(p, EDGE_CAP)
    total = 0
    for mask in range(1 << p.n):
        if not _independent(mask, p.h):
            continue
        for i in range(p.n):
            bit = 1 << i
            if not mask & bit and _independent(mask | bit, p.h):
                total += 1
    return total
