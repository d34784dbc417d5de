"""Lower bound on h_2 for Gorenstein h-vectors, and the decomposition filter.

``lower_bound(r, e)`` evaluates

    (r_(e-1))_{-1}^{-1} + (r_(e-1))_{-(e-3)}^{-(e-2)}

which no Gorenstein h-vector ``(1, r, h_2, ..., 1)`` of socle degree ``e`` can
undercut.  :func:`gorenstein_necessary` searches for the splitting
``h = b + c`` that every Gorenstein h-vector admits (``b`` Gorenstein of one
lower socle degree, ``c`` the quotient by a general linear form), with ``c``
held under Green's bound.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Optional

from .binomial import expand, green_bound, macaulay_bound
from .osequence import HVector, as_hvector, is_osequence


@dataclass(frozen=True)
class BoundReport:
    r: int
    e: int
    lower: int
    term_first: int
    term_second: int

    @property
    def meets_r(self) -> bool:
        return self.lower >= self.r

    def __str__(self) -> str:
        return f"lower={self.lower} ({self.term_first}+{self.term_second})"


def lower_bound(r: int, e: int) -> BoundReport:
    if e < 4:
        raise ValueError(f"socle degree must be >= 4, got {e}")
    if r < 2:
        raise ValueError(f"codimension must be >= 2, got {r}")
    exp = expand(r, e - 1)
    first = exp.shifted(-1, -1)
    second = exp.shifted(-(e - 3), -(e - 2))
    return BoundReport(r, e, first + second, first, second)


def unimodality_table(e: int, r_max: int) -> list[tuple[int, int, bool]]:
    """Rows ``(r, lower, lower >= r)`` for r = 2..r_max.

    ``(1, r, ..., r, 1)`` is always Gorenstein, so a ``True`` in the last
    column pins the minimum h_2 at exactly r.
    """
    return [(rep.r, rep.lower, rep.meets_r) for rep in bound_reports(e, r_max)]


def bound_reports(e: int, r_max: int) -> list[BoundReport]:
    return [lower_bound(r, e) for r in range(2, r_max + 1)]


TABLE_HEADER = ("r", "e", "lower", "term1", "term2", "meets_r")


def table_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for rep in reports:
        writer.writerow([rep.r, rep.e, rep.lower, rep.term_first, rep.term_second,
                         "true" if rep.meets_r else "false"])
    return buf.getvalue()


# -- decomposition filter ------------------------------------------------


class NotSymmetricError(ValueError):
    code = "not-symmetric"


class NotOSequenceError(ValueError):
    code = "not-osequence"


@dataclass(frozen=True)
class Decomposition:
    """``h = b + c`` componentwise with ``b_0 = 0`` and ``c_0 = 1``.

    ``b`` is recorded in degrees 0..e (so ``b[0] == 0``); ``gorenstein_part``
    drops that leading zero to give a socle-degree e-1 vector.
    """

    b: HVector
    c: HVector

    @property
    def gorenstein_part(self) -> HVector:
        return HVector(self.b[1:])


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    witness: Optional[Decomposition] = None

    def __bool__(self) -> bool:
        return self.feasible


def _check_input(h: HVector) -> HVector:
    h = h.trimmed() if h and h[0] == 1 else h
    if not h or h[0] != 1:
        raise NotOSequenceError(f"h-vector must start with 1: {h}")
    if h != h[::-1]:
        raise NotSymmetricError(f"h-vector is not symmetric: {h}")
    if not is_osequence(h):
        raise NotOSequenceError(f"h-vector is not an O-sequence: {h}")
    return h


def _decompositions(h: HVector):
    """Yield admissible ``c`` vectors, largest first in lexicographic order."""
    e = len(h) - 1
    c = [1] + [0] * e
    if e == 0:
        return
    if e == 1:
        yield (1, 0)
        return
    c[1] = h[1] - 1  # b_1 = 1
    ceilings = [0] + [green_bound(h[d], d) for d in range(1, e + 1)]
    if c[1] > ceilings[1]:
        return

    def fill(d: int):
        if d == e:
            # b_e = b_1 = 1 and h_e = 1 force c_e = 0
            yield tuple(c)
            return
        mirror = e + 1 - d  # b_d = b_mirror by symmetry of b
        top = min(ceilings[d], macaulay_bound(c[d - 1], d - 1), h[d] - 1)
        if mirror < d:
            value = h[d] - (h[mirror] - c[mirror])
            choices = [value] if 0 <= value <= top else []
        else:
            choices = range(top, -1, -1)
        for value in choices:
            c[d] = value
            yield from fill(d + 1)

    yield from fill(2)


def _search(h: HVector, depth: int) -> Optional[Decomposition]:
    e = len(h) - 1
    if e == 0:
        return Decomposition(HVector((0,)), h)
    for c in _decompositions(h):
        b = HVector((0,) + tuple(h[d] - c[d] for d in range(1, e + 1)))
        inner = HVector(b[1:])
        if inner != inner[::-1] or not is_osequence(inner):
            continue
        if depth > 1 and _search(inner, depth - 1) is None:
            continue
        return Decomposition(b, HVector(c))
    return None


def gorenstein_necessary(h: Iterable[int], max_depth: Optional[int] = None) -> Feasibility:
    """Necessary-condition test for ``h`` being a Gorenstein h-vector.

    Looks for ``h = b + c`` where ``c`` is an O-sequence with
    ``c_d <= green_bound(h_d, d)`` and ``c_e = 0``, and ``b`` (shifted down one
    degree) is symmetric with ends 1 and passes the same test recursively, up
    to ``max_depth`` levels (default: the socle degree).  Candidates for ``c``
    are tried from the Green ceiling downward, so the returned witness is the
    lexicographically largest ``c``.

    An infeasible verdict proves ``h`` is not Gorenstein; a feasible one proves
    nothing.  Worst case is exponential in the socle degree.
    """
    h = _check_input(as_hvector(h))
    e = len(h) - 1
    depth = max(e, 1) if max_depth is None else max_depth
    if depth < 1:
        raise ValueError(f"max_depth must be >= 1, got {depth}")
    found = _search(h, depth)
    return Feasibility(found is not None, found)
