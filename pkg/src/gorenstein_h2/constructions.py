"""Upper-bound side for socle degree 4: trivial extensions, lifts, asymptotics.

The pipeline behind :func:`upper_bound_h2`:

1. write ``r = m + C(m+1,3) + C(a+1,2) + b`` (:func:`lemma11_decompose`);
2. take the level h-vector ``(1, m, C(m,2)+a, C(m+1,3)+C(a+1,2))``;
3. form its trivial extension, a Gorenstein vector of codimension ``r - b``;
4. lift it ``b`` times, each lift adding one to every interior entry.

The result ``(1, r, 2C(m,2)+2a+b, r, 1)`` is Gorenstein, so its middle entry
bounds the minimum h_2 from above.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .binomial import expand
from .bounds import lower_bound
from .osequence import HVector, as_hvector, is_osequence


def trivial_extension(h: Iterable[int]) -> HVector:
    """``(1, h_1..h_j) -> (1, H_1..H_j, 1)`` with ``H_i = h_i + h_{j+1-i}``."""
    h = as_hvector(h)
    if len(h) < 2:
        raise ValueError(f"trivial extension needs at least (1, h_1), got {h}")
    j = len(h) - 1
    return HVector((1,) + tuple(h[i] + h[j + 1 - i] for i in range(1, j + 1)) + (1,))


def lift_hvector(h: Iterable[int], times: int = 1) -> HVector:
    """Add ``times`` to every interior entry of a symmetric h-vector."""
    h = as_hvector(h)
    if h != h[::-1]:
        raise ValueError(f"lift needs a symmetric h-vector, got {h}")
    if len(h) < 4:
        # at socle degree 2 the lift cannot keep the (1, r, ..., r, 1) shape
        raise ValueError(f"lift needs socle degree >= 3, got {h}")
    if times < 0:
        raise ValueError(f"lift count must be >= 0, got {times}")
    return HVector((h[0],) + tuple(x + times for x in h[1:-1]) + (h[-1],))


class Lemma11Triple(NamedTuple):
    m: int
    a: int
    b: int

    @property
    def value(self) -> int:
        return self.m + math.comb(self.m + 1, 3) + math.comb(self.a + 1, 2) + self.b

    def is_valid(self) -> bool:
        return 1 <= self.a <= self.m - 1 and 0 <= self.b <= self.a + 2


def _tetra(m: int) -> int:
    return m + math.comb(m + 1, 3)


def lemma11_decompose(r: int) -> Lemma11Triple:
    """Write ``r >= 4`` as ``m + C(m+1,3) + C(a+1,2) + b``.

    ``1 <= a <= m-1`` and ``0 <= b <= a+2``.  ``m`` is the largest value with
    ``m + C(m+1,3) <= r`` except when that inequality is an equality, where
    the triple drops to ``(m-1, m-2, m)``.
    """
    if r < 4:
        raise ValueError(f"r must be >= 4, got {r}")
    m = max(1, int(math.exp(math.log(6 * r) / 3)))
    while _tetra(m) > r:
        m -= 1
    while _tetra(m + 1) <= r:
        m += 1
    rest = r - _tetra(m)
    if rest == 0:
        # m + C(m+1,3) = (m-1) + C(m,3) + C(m-1,2) + m
        return Lemma11Triple(m - 1, m - 2, m)
    terms = expand(rest, 2).terms
    a = terms[0][0] - 1
    b = terms[1][0] if len(terms) > 1 else 0
    if a == m:
        # rest == C(m+1,2) == C(m,2) + m
        a, b = m - 1, m
    return Lemma11Triple(m, a, b)


@dataclass(frozen=True)
class UpperBound:
    value: int
    certificate: HVector
    triple: Lemma11Triple
    level: HVector


def upper_bound_h2(r: int) -> UpperBound:
    m, a, b = triple = lemma11_decompose(r)
    level = HVector((1, m, math.comb(m, 2) + a, math.comb(m + 1, 3) + math.comb(a + 1, 2)))
    if not is_osequence(level):
        raise AssertionError(f"level h-vector {level} is not an O-sequence")
    h = lift_hvector(trivial_extension(level), b)
    if h[1] != r:
        raise AssertionError(f"construction produced codimension {h[1]}, expected {r}")
    return UpperBound(h[2], h, triple, level)


# -- asymptotics ------------------------------------------------------------

_SIX_23 = 6 ** (2 / 3)


@dataclass(frozen=True)
class AsymptoticRow:
    r: int
    k: int
    m: int
    lower: int
    upper: int
    lower_ratio: float
    upper_ratio: float
    G: float
    H: float

    @property
    def deviation(self) -> float:
        return max(abs(self.lower_ratio - 1), abs(self.upper_ratio - 1))


def G_value(k: int) -> float:
    """Lower envelope for f(r)/(6r)^(2/3), with k the top of r's 3-binomial expansion."""
    denom = math.comb(k, 3) + math.comb(k - 1, 2) + (k - 1)
    return (k * k - 4 * k + 4) / (_SIX_23 * denom ** (2 / 3))


def H_value(m: int) -> float:
    return (m * m + 2 * m - 1) / (_SIX_23 * (m + math.comb(m, 3)) ** (2 / 3))


def asymptotic_row(r: int) -> AsymptoticRow:
    if r < 4:
        raise ValueError(f"r must be >= 4, got {r}")
    k = expand(r, 3).terms[0][0]
    up = upper_bound_h2(r)
    lower = lower_bound(r, 4).lower
    scale = (6 * r) ** (2 / 3)
    return AsymptoticRow(r, k, up.triple.m, lower, up.value,
                         lower / scale, up.value / scale, G_value(k), H_value(up.triple.m))


def asymptotic_table(r_values: Sequence[int], workers: int = 1) -> list[AsymptoticRow]:
    """One row per r, in input order."""
    for r in r_values:
        if r < 4:
            raise ValueError(f"r must be >= 4, got {r}")
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(asymptotic_row, r_values))
    return [asymptotic_row(r) for r in r_values]


def geometric_range(rmin: int, rmax: int, factor: int) -> list[int]:
    if factor < 2:
        raise ValueError(f"geometric factor must be >= 2, got {factor}")
    out = []
    r = rmin
    while r <= rmax:
        out.append(r)
        r *= factor
    return out


ASYMPTOTIC_HEADER = ("r", "k", "m", "lower", "upper", "lower_ratio", "upper_ratio", "G", "H")


def asymptotic_csv(rows: Iterable[AsymptoticRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(ASYMPTOTIC_HEADER)
    for row in rows:
        writer.writerow([row.r, row.k, row.m, row.lower, row.upper]
                        + [f"{x:.6g}" for x in (row.lower_ratio, row.upper_ratio, row.G, row.H)])
    return buf.getvalue()
