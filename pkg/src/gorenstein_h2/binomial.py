"""Macaulay i-binomial expansions and their shifted evaluations.

Every integer ``n >= 0`` has a unique expansion

    n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j),   n_i > ... > n_j >= j >= 1

and the shifted sum ``(n_(i))_a^b`` adds ``b`` to every top and ``a`` to every
bottom before re-summing.  The Macaulay and Green bounds are the two shifts
``(1, 1)`` and ``(0, -1)``.

All arithmetic is on Python ints, so there is no overflow.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple


def binom(m: int, q: int) -> int:
    """C(m, q) with C(m, q) = 0 whenever m < q or q < 0."""
    if q < 0 or m < q:
        return 0
    return math.comb(m, q)


class ShiftSpec(NamedTuple):
    a: int  # added to every bottom
    b: int  # added to every top


@dataclass(frozen=True)
class BinomialExpansion:
    index: int
    terms: tuple[tuple[int, int], ...]  # (top, bottom), bottoms index, index-1, ...

    @property
    def value(self) -> int:
        return sum(math.comb(top, bottom) for top, bottom in self.terms)

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(top for top, _ in self.terms)

    def shifted(self, a: int, b: int) -> int:
        return eval_shift(self, ShiftSpec(a, b))

    def check(self) -> None:
        """Raise ``AssertionError`` if the expansion violates its invariants."""
        bottoms = [bottom for _, bottom in self.terms]
        assert bottoms == list(range(self.index, self.index - len(bottoms), -1))
        tops = self.tops
        assert all(x > y for x, y in zip(tops, tops[1:]))
        if self.terms:
            top, bottom = self.terms[-1]
            assert top >= bottom >= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"C({top},{bottom})" for top, bottom in self.terms)


@lru_cache(maxsize=1 << 16)  # greedy remainders recur a lot across nearby n
def _largest_top(n: int, i: int) -> tuple[int, int]:
    """Largest t with C(t, i) <= n, and C(t, i); needs n >= 1, i >= 1 (so t >= i)."""
    if i == 1:
        return n, n
    if n <= i:
        return i, 1  # C(i, i) = 1 <= n < i + 1 = C(i + 1, i)
    if i == 2:
        t = (1 + math.isqrt(8 * n + 1)) // 2
        return t, t * (t - 1) // 2
    # C(t, i) ~ (t - (i-1)/2)^i / i!; the galloping search below absorbs float error
    t = max(i, int(math.exp((math.log(n) + math.lgamma(i + 1)) / i) + (i - 1) / 2))
    c = math.comb(t, i)
    if c <= n:
        nxt = math.comb(t + 1, i)
        if nxt > n:
            return t, c
        step = 1
        while math.comb(t + step, i) <= n:
            t += step
            step *= 2
        hi = t + step
    else:
        hi = t
        step = 1
        while t - step > i and math.comb(t - step, i) > n:
            hi = t - step
            step *= 2
        t = max(i, t - step)
    lo = t  # comb(lo, i) <= n < comb(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= n:
            lo = mid
        else:
            hi = mid
    return lo, math.comb(lo, i)


def expand(n: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of ``n``; ``expand(0, i)`` has no terms."""
    if i < 1:
        raise ValueError(f"binomial index must be >= 1, got {i}")
    if n < 0:
        raise ValueError(f"cannot expand a negative integer ({n})")
    terms = []
    bottom = i
    while n > 0:
        top, c = _largest_top(n, bottom)
        terms.append((top, bottom))
        n -= c
        bottom -= 1
    return BinomialExpansion(i, tuple(terms))


def eval_shift(exp: BinomialExpansion, s: ShiftSpec | tuple[int, int]) -> int:
    a, b = s
    total = 0
    for top, bottom in exp.terms:
        m, q = top + b, bottom + a
        if 0 <= q <= m:
            total += math.comb(m, q)
    return total


def macaulay_bound(h: int, d: int) -> int:
    """Largest admissible value in degree d+1 after value ``h`` in degree d."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return eval_shift(expand(h, d), (1, 1))


def green_bound(h: int, d: int) -> int:
    """Upper bound on the degree-d value after cutting by a general linear form."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    return eval_shift(expand(h, d), (0, -1))
