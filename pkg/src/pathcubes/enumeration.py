"""Independent subsets of P_n^(h) as gap-constrained bitstrings.

A subset is a str of '0'/'1' of length n; character i-1 is b_i, set exactly
when v_i belongs to the subset. Any two 1s sit more than h positions apart.
"""
from __future__ import annotations

from typing import Iterator, List

from .counting import PathPower
from .errors import CapacityError

ENUMERATION_CAP = 30

IndependentSubset = str


def ones(bits: str) -> List[int]:
    """1-based positions of the set bits."""
    return [i for i, b in enumerate(bits, 1) if b == "1"]


def cardinality(bits: str) -> int:
    return bits.count("1")


def is_independent(bits: str, h: int) -> bool:
    pos = ones(bits)
    # sorted, so checking consecutive pairs covers every pair
    return all(b - a > h for a, b in zip(pos, pos[1:]))


def _descend(n: int, h: int, k=None) -> Iterator[str]:
    # Emit '0' before '1' at each position, which yields ascending numeral order.
    buf = ["0"] * n

    def rec(pos, remaining):
        if remaining == 0 or pos >= n:
            if remaining in (0, None):
                yield "".join(buf)
            return
        yield from rec(pos + 1, remaining)
        buf[pos] = "1"
        yield from rec(pos + h + 1, None if remaining is None else remaining - 1)
        buf[pos] = "0"

    yield from rec(0, k)


def _guard(p: PathPower, cap: int):
    if p.n > cap:
        raise CapacityError(p.n, cap)


def iter_independent(p: PathPower, cap: int = ENUMERATION_CAP) -> Iterator[str]:
    _guard(p, cap)
    return _descend(p.n, p.h)


def enumerate_independent(p: PathPower, cap: int = ENUMERATION_CAP) -> List[str]:
    """All independent subsets, ascending by the bitstring read as base 2 (b_1 high)."""
    return list(iter_independent(p, cap))


def enumerate_independent_k(p: PathPower, k: int, cap: int = ENUMERATION_CAP) -> List[str]:
    """The independent k-subsets, in the same order as enumerate_independent."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    _guard(p, cap)
    return list(_descend(p.n, p.h, k))
