"""Re-derive every published number the library is anchored to."""
from __future__ import annotations

from typing import Callable, Iterator

from .apolarity import RATIONAL, hilbert_of_form, lift_form, search_form, stanley_form
from .bounds import gorenstein_necessary, lower_bound, unimodality_table
from .constructions import asymptotic_table, lemma11_decompose, lift_hvector, trivial_extension, upper_bound_h2
from .osequence import is_osequence, is_unimodal

STANLEY = (1, 13, 12, 13, 1)


def _table_e4() -> bool:
    rows = unimodality_table(4, 10)
    return all(meets for r, _, meets in rows if r <= 9) and rows[-1] == (10, 9, False)


def _table_e5() -> bool:
    return all(meets for _, _, meets in unimodality_table(5, 13))


def _asymptotics() -> bool:
    rows = asymptotic_table([10**3, 10**4, 10**5, 10**6])
    devs = [row.deviation for row in rows]
    last = rows[-1]
    return (0.9 <= last.lower_ratio <= 1.1 and 0.9 <= last.upper_ratio <= 1.1
            and all(x >= y for x, y in zip(devs, devs[1:]))
            and all(row.G <= row.lower_ratio and row.upper_ratio <= row.H for row in rows))


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("lower bound f(13,4) >= 12", lambda: lower_bound(13, 4).lower == 12),
    ("trivial extension of (1,3,6,10) is (1,13,12,13,1)", lambda: trivial_extension((1, 3, 6, 10)) == STANLEY),
    ("(1,13,12,13,1) is not unimodal", lambda: not is_unimodal(STANLEY)),
    ("lower bound f(10,4) >= 9", lambda: lower_bound(10, 4).lower == 9),
    ("lower bound f(9,5) >= 9", lambda: lower_bound(9, 5).lower == 9),
    ("e=4: lower >= r for r <= 9, first failure r=10", _table_e4),
    ("e=5: lower >= r for r <= 13", _table_e5),
    ("r=13: lower(13,4) < 13 <= lower(13,5)",
     lambda: lower_bound(13, 4).lower < 13 <= lower_bound(13, 5).lower),
    ("lift (1,13,12,13,1) -> (1,14,13,14,1)", lambda: lift_hvector(STANLEY) == (1, 14, 13, 14, 1)),
    ("level vector (1,3,5,7) is an O-sequence", lambda: is_osequence((1, 3, 5, 7))),
    ("r=13 decomposes as m=3 a=2 b=3", lambda: lemma11_decompose(13) == (3, 2, 3)),
    ("construction gives (1,13,13,13,1)", lambda: upper_bound_h2(13).certificate == (1, 13, 13, 13, 1)),
    ("filter accepts (1,13,12,13,1)", lambda: gorenstein_necessary(STANLEY).feasible),
    ("filter rejects (1,13,11,13,1)", lambda: not gorenstein_necessary((1, 13, 11, 13, 1)).feasible),
    ("Stanley form has h-vector (1,13,12,13,1) mod 32003", lambda: hilbert_of_form(stanley_form()) == STANLEY),
    ("Stanley form has h-vector (1,13,12,13,1) over Q", lambda: hilbert_of_form(stanley_form(RATIONAL)) == STANLEY),
    ("lifted Stanley form has h-vector (1,14,13,14,1)",
     lambda: hilbert_of_form(lift_form(stanley_form())) == (1, 14, 13, 14, 1)),
    ("search finds a form for (1,13,12,13,1)", lambda: search_form(STANLEY, trials=0) is not None),
    ("search finds no form for (1,10,9,10,1) in 30 trials",
     lambda: search_form((1, 10, 9, 10, 1), trials=30, seed=0) is None),
    ("asymptotic ratios: bracketed, within 10% at 1e6, converging", _asymptotics),
]


def run() -> Iterator[tuple[str, bool]]:
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception:  # a crash is a failure, not an abort
            ok = False
        yield name, ok
