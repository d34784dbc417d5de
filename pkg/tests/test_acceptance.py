"""Exit criteria: every check runs at its stated tolerance and time budget.

Each test records one ``PASS``/``FAIL`` line, printed in the terminal summary
(and immediately with ``pytest -s``).
"""
import itertools
import math
import time
from contextlib import contextmanager

import numpy as np

from conftest import ACCEPTANCE_LINES
from gorenstein_h2.apolarity import RATIONAL, hilbert_of_form, lift_form, random_form, stanley_form
from gorenstein_h2.binomial import expand, green_bound
from gorenstein_h2.bounds import NotOSequenceError, gorenstein_necessary, lower_bound
from gorenstein_h2.constructions import asymptotic_table, lemma11_decompose, trivial_extension
from gorenstein_h2.osequence import is_osequence, oracle_osequences

STANLEY = (1, 13, 12, 13, 1)


@contextmanager
def criterion(number, name, budget):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < budget
        status = "PASS" if ok and within else "FAIL"
        line = f"criterion {number:2d} {status}  {name}  ({elapsed:.3f}s, budget {budget:g}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, f"criterion {number} took {elapsed:.3f}s, budget {budget}s"


def interior_plus_one(h):
    return (1,) + tuple(x + 1 for x in h[1:-1]) + (1,)


def test_01_example_reproduction():
    # warm the code paths so the budget measures the computation, not imports
    lower_bound(5, 4), trivial_extension((1, 1))
    with criterion(1, "f(13,4)=12: bound 12 meets (1,13,12,13,1)", 1e-3):
        assert lower_bound(13, 4).lower == 12
        assert trivial_extension((1, 3, 6, 10)) == STANLEY


def test_02_unimodality_tables():
    with criterion(2, "lower(r,4) >= r iff r <= 9 (r=10 gives 9); lower(r,5) >= r for r <= 13", 10e-3):
        for r in range(2, 10):
            assert lower_bound(r, 4).lower >= r
        assert lower_bound(10, 4).lower == 9
        for r in range(2, 14):
            assert lower_bound(r, 5).lower >= r
        assert lower_bound(13, 4).lower == 12 < 13 <= lower_bound(13, 5).lower


def test_03_stanley_form_certification():
    with criterion(3, "Stanley form -> (1,13,12,13,1) mod 32003 and over Q", 1.0):
        assert hilbert_of_form(stanley_form(32003)) == STANLEY
        assert hilbert_of_form(stanley_form(RATIONAL)) == STANLEY


def test_04_lift_at_form_level():
    with criterion(4, "h(F + y^e) = interior+1 for Stanley form and 5 random e=4 forms", 5.0):
        F = stanley_form()
        assert hilbert_of_form(lift_form(F)) == (1, 14, 13, 14, 1)
        for k in range(5):
            rng = np.random.default_rng([4, k])
            r = int(rng.integers(2, 7))
            G = random_form(r, 4, rng, density=float(rng.uniform(0.1, 1.0)))
            assert hilbert_of_form(lift_form(G)) == interior_plus_one(hilbert_of_form(G))


def test_05_asymptotics():
    with criterion(5, "ratios in [0.9,1.1] at 1e6, deviation non-increasing, G <= ratios <= H", 10.0):
        rows = asymptotic_table([10**3, 10**4, 10**5, 10**6])
        last = rows[-1]
        assert 0.90 <= last.lower_ratio <= 1.10
        assert 0.90 <= last.upper_ratio <= 1.10
        devs = [row.deviation for row in rows]
        assert all(x >= y for x, y in zip(devs, devs[1:])), devs
        for row in rows:
            assert row.G <= row.lower_ratio
            assert row.upper_ratio <= row.H


def test_06_pascal_complement():
    with criterion(6, "n = green_bound(n,i) + (n_(i))_{-1}^{-1} for n <= 1e4, i <= 10", 5.0):
        for i in range(1, 11):
            for n in range(0, 10**4 + 1):
                assert green_bound(n, i) + expand(n, i).shifted(-1, -1) == n


def test_07_oracle_equivalence():
    with criterion(7, "is_osequence == order-ideal oracle for h_1 <= 3, socle degree <= 4", 30.0):
        oracle = oracle_osequences(3, 4)
        checked = 0
        for k in range(0, 5):
            ranges = [range(0, 4)] + [range(0, math.comb(d + 2, d) + 2) for d in range(2, k + 1)]
            for tail in itertools.product(*ranges[:k]):
                if k and tail[-1] == 0:
                    continue
                h = (1,) + tail
                assert is_osequence(h) == (h in oracle), h
                checked += 1
        assert checked > 5000


def test_08_lemma11_totality():
    with criterion(8, "lemma11_decompose valid for every 4 <= r <= 1e6", 30.0):
        assert lemma11_decompose(13) == (3, 2, 3)
        for r in range(4, 10**6 + 1):
            m, a, b = lemma11_decompose(r)
            assert 1 <= a <= m - 1 and 0 <= b <= a + 2, r
            assert m + math.comb(m + 1, 3) + math.comb(a + 1, 2) + b == r, r


def test_09_filter_soundness():
    with criterion(9, "filter: (1,13,12,13,1) feasible, (1,13,11,13,1) not, v < lower => infeasible (r <= 20)", 60.0):
        assert gorenstein_necessary(STANLEY).feasible
        assert not gorenstein_necessary((1, 13, 11, 13, 1)).feasible
        for r in range(2, 21):
            for v in range(lower_bound(r, 4).lower):
                try:
                    verdict = gorenstein_necessary((1, r, v, r, 1))
                except NotOSequenceError:
                    continue  # not even an O-sequence, so certainly not Gorenstein
                assert not verdict.feasible, (r, v)


def test_10_apolarity_invariants():
    with criterion(10, "100 random forms per (r<=5, e<=5): symmetric, ends 1, O-sequence, two primes agree", 120.0):
        for r in range(1, 6):
            for e in range(1, 6):
                rng = np.random.default_rng([10, r, e])
                for _ in range(100):
                    F = random_form(r, e, rng, prime=RATIONAL, density=float(rng.uniform(0.05, 1.0)))
                    h = hilbert_of_form(F.with_field(32749))
                    assert h == h[::-1], (F, h)
                    assert h[0] == h[-1] == 1
                    assert is_osequence(h)
                    assert hilbert_of_form(F.with_field(32719)) == h, F
