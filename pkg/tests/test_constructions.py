import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gorenstein_h2.bounds import lower_bound
from gorenstein_h2.constructions import (ASYMPTOTIC_HEADER, Lemma11Triple, asymptotic_csv, asymptotic_row,
                                         asymptotic_table, geometric_range, lemma11_decompose, lift_hvector,
                                         trivial_extension, upper_bound_h2)
from gorenstein_h2.osequence import is_osequence


def all_triples(r):
    """Every (m, a, b) with 1 <= a <= m-1, 0 <= b <= a+2 summing to r."""
    out = []
    m = 2
    while m + math.comb(m + 1, 3) <= r:
        for a in range(1, m):
            b = r - m - math.comb(m + 1, 3) - math.comb(a + 1, 2)
            if 0 <= b <= a + 2:
                out.append((m, a, b))
        m += 1
    return out


@pytest.mark.parametrize("h, expected", [
    ((1, 3, 6, 10), (1, 13, 12, 13, 1)),
    ((1, 3, 5, 7), (1, 10, 10, 10, 1)),
    ((1, 1), (1, 2, 1)),
])
def test_trivial_extension(h, expected):
    assert trivial_extension(h) == expected


def test_trivial_extension_rejects_short():
    with pytest.raises(ValueError):
        trivial_extension((1,))


@given(st.lists(st.integers(0, 50), min_size=1, max_size=6))
def test_trivial_extension_is_symmetric(tail):
    H = trivial_extension((1,) + tuple(tail))
    assert H == H[::-1]
    assert H[0] == H[-1] == 1


def test_lift_hvector():
    assert lift_hvector((1, 13, 12, 13, 1)) == (1, 14, 13, 14, 1)
    assert lift_hvector((1, 3, 5, 3, 1)) == (1, 4, 6, 4, 1)
    assert lift_hvector((1, 10, 10, 10, 1), 3) == (1, 13, 13, 13, 1)
    with pytest.raises(ValueError):
        lift_hvector((1, 2, 1))
    with pytest.raises(ValueError):
        lift_hvector((1, 3, 2, 1))


@pytest.mark.parametrize("r, expected", [(13, (3, 2, 3)), (4, (2, 1, 0)), (14, (3, 2, 4))])
def test_lemma11_examples(r, expected):
    assert lemma11_decompose(r) == expected
    # the oracle: among all valid triples, ours has the largest m and then the largest a
    assert max(all_triples(r)) == expected


def test_lemma11_agrees_with_exhaustive_search():
    for r in range(4, 2000):
        t = lemma11_decompose(r)
        assert t.is_valid() and t.value == r
        assert t == max(all_triples(r)), r


def test_lemma11_rejects_small():
    with pytest.raises(ValueError):
        lemma11_decompose(3)


def test_lemma11_maximal_m_outside_equality_case():
    for r in range(4, 5000):
        top = max(k for k in range(1, 40) if k + math.comb(k + 1, 3) <= r)
        expected = top - 1 if top + math.comb(top + 1, 3) == r else top
        assert lemma11_decompose(r).m == expected


def test_triple_value():
    assert Lemma11Triple(3, 2, 3).value == 13


@pytest.mark.parametrize("r, value, cert", [(13, 13, (1, 13, 13, 13, 1)), (10, 10, (1, 10, 10, 10, 1))])
def test_upper_bound_examples(r, value, cert):
    up = upper_bound_h2(r)
    assert up.value == value
    assert up.certificate == cert


def test_upper_bound_closed_form():
    for r in range(4, 3000):
        m, a, b = lemma11_decompose(r)
        up = upper_bound_h2(r)
        assert up.value == 2 * math.comb(m, 2) + 2 * a + b
        assert up.certificate == (1, r, up.value, r, 1)
        assert is_osequence(up.level)
        assert up.value <= m * m + 2 * m - 1


def test_sandwich_to_1e5():
    for r in range(4, 10**5 + 1):
        assert lower_bound(r, 4).lower <= upper_bound_h2(r).value


def test_upper_bound_subadditive():
    prev = upper_bound_h2(4).value
    for r in range(5, 10**4 + 1):
        cur = upper_bound_h2(r).value
        assert cur <= prev + 1, r
        prev = cur


def test_asymptotic_row_r13():
    row = asymptotic_row(13)
    assert (row.lower, row.upper, row.k, row.m) == (12, 13, 5, 3)


def test_asymptotic_row_closed_forms():
    row = asymptotic_row(10**6)
    k, m = row.k, row.m
    assert math.comb(k, 3) <= 10**6 < math.comb(k + 1, 3)
    six = 6 ** (2 / 3)
    assert row.G == pytest.approx((k - 2) ** 2 / (six * (math.comb(k, 3) + math.comb(k - 1, 2) + k - 1) ** (2 / 3)))
    assert row.H == pytest.approx((m * m + 2 * m - 1) / (six * (m + math.comb(m, 3)) ** (2 / 3)))
    assert 0.9 <= row.lower_ratio <= 1.1
    assert 0.9 <= row.upper_ratio <= 1.1


def test_sandwich_of_ratios():
    rs = list(range(4, 3000)) + geometric_range(3000, 10**12, 7)
    for row in asymptotic_table(rs):
        assert row.lower <= row.upper
        assert row.G <= row.lower_ratio <= row.upper_ratio <= row.H


def test_deviation_decreases_geometrically():
    devs = [row.deviation for row in asymptotic_table([10**3, 10**4, 10**5, 10**6])]
    assert devs == sorted(devs, reverse=True)


def test_table_order_and_workers():
    rs = [10**5, 17, 4, 999]
    serial = asymptotic_table(rs)
    assert [row.r for row in serial] == rs
    assert asymptotic_table(rs, workers=3) == serial


def test_table_rejects_small_r():
    with pytest.raises(ValueError):
        asymptotic_table([5, 3])


def test_geometric_range():
    assert geometric_range(1000, 10**6, 10) == [1000, 10**4, 10**5, 10**6]
    with pytest.raises(ValueError):
        geometric_range(4, 100, 1)


def test_asymptotic_csv():
    text = asymptotic_csv(asymptotic_table([13, 1000]))
    lines = text.splitlines()
    assert lines[0] == ",".join(ASYMPTOTIC_HEADER) == "r,k,m,lower,upper,lower_ratio,upper_ratio,G,H"
    assert lines[2] == "1000,19,18,304,317,0.920674,0.960045,0.802036,1.22711"
    assert text == asymptotic_csv(asymptotic_table([13, 1000]))


def test_huge_r_stays_exact():
    r = 10**30
    row = asymptotic_row(r)
    assert lemma11_decompose(r).value == r
    assert row.lower <= row.upper
