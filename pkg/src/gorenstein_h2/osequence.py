"""h-vectors, Macaulay's O-sequence test and a brute-force order-ideal oracle."""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

from .binomial import macaulay_bound


class HVector(tuple):
    """Immutable tuple of non-negative ints ``(h_0, ..., h_e)``.

    Compares equal to the plain tuple with the same entries.  Positions past
    the end are read as 0 by :meth:`at`.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        if any(x < 0 for x in entries):
            raise ValueError(f"h-vector entries must be non-negative: {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "HVector":
        """Parse ``"1,13,12,13,1"``."""
        text = text.strip()
        if not text:
            raise ValueError("empty h-vector")
        try:
            return cls(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"malformed h-vector {text!r}; expected comma-separated integers") from None

    def __str__(self) -> str:
        return ",".join(str(x) for x in self)

    def __repr__(self) -> str:
        return f"HVector({tuple(self)!r})"

    def at(self, i: int) -> int:
        return self[i] if 0 <= i < len(self) else 0

    @property
    def codimension(self) -> int:
        return self.at(1)

    @property
    def socle_degree(self) -> int:
        """Last index holding a positive entry (-1 for the zero vector)."""
        for i in range(len(self) - 1, -1, -1):
            if self[i] > 0:
                return i
        return -1

    def trimmed(self) -> "HVector":
        return HVector(self[: self.socle_degree + 1])

    def is_symmetric(self) -> bool:
        h = self.trimmed()
        return h == h[::-1]


def as_hvector(h: Iterable[int]) -> HVector:
    return h if isinstance(h, HVector) else HVector(h)


def is_osequence(h: Iterable[int]) -> bool:
    """True iff ``h`` obeys Macaulay's growth bound in every degree >= 1."""
    h = as_hvector(h)
    if not h or h[0] != 1:
        raise ValueError(f"an h-vector must start with h_0 = 1, got {h}")
    seen_zero = False
    for d in range(1, len(h)):
        if h[d] == 0:
            seen_zero = True
        elif seen_zero:
            return False
        if d + 1 < len(h) and h[d + 1] > macaulay_bound(h[d], d):
            return False
    return True


def is_unimodal(h: Iterable[int]) -> bool:
    """True iff no strict increase ever follows a strict decrease."""
    h = tuple(h)
    dropped = False
    for x, y in zip(h, h[1:]):
        if y < x:
            dropped = True
        elif y > x and dropped:
            return False
    return True


# -- brute-force oracle ---------------------------------------------------

ORACLE_MAX_VARS = 3
ORACLE_MAX_DEGREE = 4


def _monomials(num_vars: int, degree: int) -> list[tuple[int, ...]]:
    out = []
    for combo in itertools.combinations_with_replacement(range(num_vars), degree):
        exp = [0] * num_vars
        for v in combo:
            exp[v] += 1
        out.append(tuple(exp))
    return out


def _canonical(num_vars: int, layer: frozenset) -> tuple:
    # variable permutations do not change the counting vectors reachable above a layer
    return min(
        tuple(sorted(tuple(m[p] for p in perm) for m in layer))
        for perm in itertools.permutations(range(num_vars))
    )


def oracle_osequences(num_vars: int, max_degree: int) -> set[HVector]:
    """Counting vectors of every nonzero order ideal of monomials.

    Enumerates downward-closed monomial sets in ``num_vars`` variables with
    all degrees <= ``max_degree``.  Desk scale only: at most 3 variables and
    degree 4.
    """
    if not 1 <= num_vars <= ORACLE_MAX_VARS:
        raise ValueError(f"num_vars must be in 1..{ORACLE_MAX_VARS}, got {num_vars}")
    if not 1 <= max_degree <= ORACLE_MAX_DEGREE:
        raise ValueError(f"max_degree must be in 1..{ORACLE_MAX_DEGREE}, got {max_degree}")

    layers = [_monomials(num_vars, d) for d in range(max_degree + 1)]

    def allowed_above(layer: frozenset, d: int) -> list:
        # monomials of degree d+1 all of whose degree-d divisors lie in layer
        out = []
        for mono in layers[d + 1]:
            ok = True
            for v in range(num_vars):
                if mono[v]:
                    below = mono[:v] + (mono[v] - 1,) + mono[v + 1:]
                    if below not in layer:
                        ok = False
                        break
            if ok:
                out.append(mono)
        return out

    @lru_cache(maxsize=None)
    def tails(d: int, key: tuple) -> frozenset:
        # all vectors (h_d, h_{d+1}, ...) reachable from the degree-d layer `key`
        layer = frozenset(key)
        here = len(layer)
        if d == max_degree:
            return frozenset({(here,)})
        cand = allowed_above(layer, d)
        result = {(here,)}
        if d + 1 == max_degree:
            result.update((here, k) for k in range(1, len(cand) + 1))
            return frozenset(result)
        for size in range(1, len(cand) + 1):
            for chosen in itertools.combinations(cand, size):
                nxt = frozenset(chosen)
                for tail in tails(d + 1, _canonical(num_vars, nxt)):
                    result.add((here,) + tail)
        return frozenset(result)

    return {HVector(t) for t in tails(0, _canonical(num_vars, frozenset(layers[0])))}
