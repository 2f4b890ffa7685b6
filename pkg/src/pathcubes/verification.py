"""Sweep every identity over a box of (n, h) and report per family.

Each family collects the first counterexample it meets; the CLI turns the
results into lines and an exit status.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from . import counting as c
from . import oracle
from .counting import PathPower
from .enumeration import cardinality, enumerate_independent, enumerate_independent_k, is_independent
from .hasse import build_hasse, covers, down_degrees

MAX_N = oracle.EDGE_CAP

Check = Tuple[bool, str]


@dataclass
class FamilyResult:
    name: str
    checks: int = 0
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def _params(max_n, max_h):
    for h in range(max_h + 1):
        for n in range(max_n + 1):
            yield PathPower(n, h)


def _counts(max_n, max_h):
    for p in _params(max_n, max_h):
        brute = oracle.brute_count(p)
        yield (
            c.count_independent_closed(p) == c.count_independent_recurrence(p) == brute,
            f"n={p.n} h={p.h}",
        )


def _counts_by_size(max_n, max_h):
    for p in _params(max_n, max_h):
        for k in range(p.n + 1):
            yield c.count_independent_k(p, k) == oracle.brute_count_k(p, k), f"n={p.n} h={p.h} k={k}"


def _size_bound(max_n, max_h):
    for p in _params(max_n, max_h):
        kmax = c.max_independent_size(p)
        for k in range(p.n + 2):
            yield (c.count_independent_k(p, k) == 0) == (k > kmax), f"n={p.n} h={p.h} k={k}"
        # summing past the printed bound adds only zeros
        padded = sum(c.count_independent_k(p, k) for k in range(p.n + 2))
        yield padded == c.count_independent_closed(p), f"n={p.n} h={p.h} padded sum"


def _enumeration(max_n, max_h):
    for p in _params(max_n, max_h):
        subsets = enumerate_independent(p)
        where = f"n={p.n} h={p.h}"
        yield len(subsets) == c.count_independent_closed(p), where
        yield all(a < b for a, b in zip(subsets, subsets[1:])), where + " order"
        yield all(is_independent(s, p.h) for s in subsets), where + " independence"
        yield sorted(oracle.brute_subsets(p)) == subsets, where + " oracle set"
        for k in range(p.n + 1):
            sub = enumerate_independent_k(p, k)
            yield sub == [s for s in subsets if cardinality(s) == k], f"{where} k={k} filter"
            yield len(sub) == c.count_independent_k(p, k), f"{where} k={k}"


def _containing(max_n, max_h):
    for p in _params(max_n, max_h):
        subsets = enumerate_independent(p)
        for k in range(1, c.max_independent_size(p) + 1):
            for i in range(1, p.n + 1):
                t = c.count_containing(p, k, i)
                where = f"n={p.n} h={p.h} k={k} i={i}"
                yield t == oracle.brute_count_containing(p, k, i), where
                yield t == sum(1 for s in subsets if cardinality(s) == k and s[i - 1] == "1"), where + " enum"
                yield t == c.count_containing(p, k, p.n + 1 - i), where + " reflection"


def _each_subset_counted_k_times(max_n, max_h):
    for p in _params(max_n, max_h):
        for k in range(1, c.max_independent_size(p) + 1):
            total = sum(c.count_containing(p, k, i) for i in range(1, p.n + 1))
            yield total == k * c.count_independent_k(p, k), f"n={p.n} h={p.h} k={k}"


def _fibonacci_shift(max_n, max_h):
    for h in range(max_h + 1):
        for m in range(1, max_n + h + 2):
            yield c.h_fibonacci(h, m) == c.extended_count(m - h - 1, h), f"h={h} m={m}"


def _edges(max_n, max_h):
    for p in _params(max_n, max_h):
        g = build_hasse(p)
        values = (
            c.edges_rank_weighted(p),
            c.edges_convolution(p),
            len(g.edges),
            oracle.brute_edge_count(p),
        )
        yield len(set(values)) == 1, f"n={p.n} h={p.h} got {values}"


def _hasse_structure(max_n, max_h):
    for p in _params(max_n, max_h):
        g = build_hasse(p)
        where = f"n={p.n} h={p.h}"
        yield list(g.vertices) == enumerate_independent(p), where + " vertices"
        yield down_degrees(g) == [cardinality(v) for v in g.vertices], where + " down-degree"
        yield len(set(g.edges)) == len(g.edges), where + " duplicates"
        yield all(u != w for u, w in g.edges), where + " self-loop"
        yield all(covers(a, b) for a, b in g.edge_strings()), where + " cover"
        # rank strictly rises along every edge, hence acyclic
        yield all(cardinality(a) + 1 == cardinality(b) for a, b in g.edge_strings()), where + " rank"


def _hypercube(max_n, max_h):
    for n in range(max_n + 1):
        p = PathPower(n, 0)
        expected = n * 2 ** (n - 1) if n else 0
        yield c.edges_rank_weighted(p) == expected, f"n={n} edges"
        yield c.count_independent_closed(p) == 2**n, f"n={n} count"


def _fibonacci_cube(max_n, max_h):
    if max_h < 1:
        return
    fib = [0, 1, 1]
    while len(fib) < max_n + 3:
        fib.append(fib[-1] + fib[-2])
    for n in range(max_n + 1):
        p = PathPower(n, 1)
        yield c.count_independent_closed(p) == fib[n + 2], f"n={n}"
        g = build_hasse(p)
        yield all(
            sum(x != y for x, y in zip(a, b)) == 1 for a, b in g.edge_strings()
        ), f"n={n} single-bit flips"


FAMILIES: List[Tuple[str, Callable[[int, int], Iterator[Check]]]] = [
    ("counts: closed = recurrence = oracle", _counts),
    ("counts by size: binomial = oracle", _counts_by_size),
    ("size bound and padded sums", _size_bound),
    ("enumeration", _enumeration),
    ("containing v_i: formula = oracle = enumeration, reflection", _containing),
    ("each k-subset counted k times", _each_subset_counted_k_times),
    ("h-Fibonacci = shifted independent counts", _fibonacci_shift),
    ("edges: rank-weighted = convolution = graph = oracle", _edges),
    ("Hasse structure", _hasse_structure),
    ("hypercube at h=0", _hypercube),
    ("Fibonacci cube at h=1", _fibonacci_cube),
]


def run_family(name, fn, max_n, max_h) -> FamilyResult:
    result = FamilyResult(name)
    for ok, where in fn(max_n, max_h):
        result.checks += 1
        if not ok:
            result.counterexample = where
            break
    return result


def verify(max_n: int, max_h: int) -> List[FamilyResult]:
    if max_n < 0 or max_h < 0:
        raise ValueError("bounds must be nonnegative")
    if max_n > MAX_N:
        raise ValueError(f"max-n {max_n} exceeds oracle cap {MAX_N}")
    return [run_family(name, fn, max_n, max_h) for name, fn in FAMILIES]
