"""Closed-form extremal values: pinned cells, brackets, domain checks."""

from math import comb

import pytest

from crdom import formulas
from crdom.formulas import ExtremalValue, Status
from crdom.graph import complete, cycle
from crdom.constructions import cocktail_party


def _value(ev: ExtremalValue) -> int:
    assert ev.status is Status.VALUE
    return ev.value


def test_max_edges_pinned():
    assert _value(formulas.max_edges(5, 0, 2)) == 6
    assert _value(formulas.max_edges(5, 1, 2)) == 6
    assert _value(formulas.max_edges(6, 4, 2)) == 12
    assert _value(formulas.max_edges(7, 2, 4)) == 7
    assert _value(formulas.max_edges(7, 2, 3)) == 12
    assert formulas.max_edges(9, 1, 7).status is Status.ZERO_BY_NONEXISTENCE
    assert formulas.max_edges(9, 1, 7).value == 0
    # n=7 full k=2 row
    assert [_value(formulas.max_edges(7, 2, r)) for r in (2, 3, 4, 5)] == [16, 12, 7, 4]
    assert formulas.max_edges(7, 2, 6).status is Status.ZERO_BY_NONEXISTENCE
    assert formulas.max_edges(6, 3, 3).status is Status.NOT_COVERED


def test_min_edges_pinned():
    assert _value(formulas.min_edges(7, 0, 3)) == 4
    assert _value(formulas.min_edges(6, 1, 3)) == 4
    assert _value(formulas.min_edges(5, 1, 2)) == 4
    assert formulas.min_edges(5, 2, 3).status is Status.NOT_COVERED
    assert formulas.min_edges(9, 1, 8).status is Status.ZERO_BY_NONEXISTENCE


def test_max_gamma_pinned():
    assert _value(formulas.max_gamma(9, 0, 10)) == 5
    assert _value(formulas.max_gamma(8, 1, 12)) == 4
    assert _value(formulas.max_gamma(8, 2, 4)) == 6
    assert _value(formulas.max_gamma(10, 2, 20)) == 5
    assert _value(formulas.max_gamma(8, 1, 6)) == 5
    assert formulas.max_gamma(8, 1, 2).status is Status.ZERO_BY_NONEXISTENCE
    assert formulas.max_gamma(8, 1, comb(7, 2) + 1).status is Status.ZERO_BY_NONEXISTENCE
    assert formulas.max_gamma(8, 2, 3).status is Status.ZERO_BY_NONEXISTENCE
    assert formulas.max_gamma(7, 2, 8).status is Status.NOT_COVERED
    # empty graph: only dominating set is V(G)
    assert _value(formulas.max_gamma(6, 0, 0)) == 6


def test_min_gamma_pinned():
    assert _value(formulas.min_gamma(10, 0, 4)) == 6
    assert _value(formulas.min_gamma(8, 1, 5)) == 4
    assert formulas.min_gamma(8, 1, 25).status is Status.ZERO_BY_NONEXISTENCE
    assert _value(formulas.min_gamma(8, 1, 12)) == 2
    assert formulas.min_gamma(8, 2, 8).status is Status.NOT_COVERED
    assert _value(formulas.min_gamma(5, 0, 4)) == 1


def test_bbnd_upper_bound():
    # first case: C(0,2) + (3-2)*2 + C(8,2) + 1
    assert formulas.bbnd_upper_bound(10, 2, 3, 0) == 31
    # k = b: floor term vanishes, both cases agree
    assert formulas.bbnd_upper_bound(10, 2, 3, 2) == 29
    assert formulas.bbnd_upper_bound(10, 4, 7, 4) == comb(4, 2) + comb(4, 2)
    with pytest.raises(ValueError):
        formulas.bbnd_upper_bound(4, 2, 3, 0)
    with pytest.raises(ValueError):
        formulas.bbnd_upper_bound(10, 2, 2, 0)
    with pytest.raises(ValueError):
        formulas.bbnd_upper_bound(10, 2, 3, 3)


def test_a_bracket():
    assert formulas.a_bracket(10, 2) == 36
    assert formulas.a_bracket(10, 5) == 21
    assert formulas.a_bracket(10, 6) == 18
    with pytest.raises(ValueError):
        formulas.a_bracket(10, 1)
    with pytest.raises(ValueError):
        formulas.a_bracket(10, 9)


def test_universal_max_edges():
    assert formulas.universal_max_edges(7, 2) == 16
    assert formulas.universal_max_edges(6, 4) == 12
    assert formulas.universal_max_edges(5, 0) == 6
    assert formulas.universal_max_edges(5, 0) == _value(formulas.max_edges(5, 0, 2))
    with pytest.raises(ValueError):
        formulas.universal_max_edges(4, 0)
    with pytest.raises(ValueError):
        formulas.universal_max_edges(7, 5)  # odd n caps k at n-3


def test_cr_max_characterization():
    assert formulas.cr_max_characterization(cycle(4))
    assert formulas.cr_max_characterization(cocktail_party(6))
    assert not formulas.cr_max_characterization(complete(5))
    assert not formulas.cr_max_characterization(complete(6))
    with pytest.raises(ValueError):
        formulas.cr_max_characterization(complete(3))


def test_domain_errors():
    with pytest.raises(ValueError):
        formulas.max_edges(1, 0, 1)
    with pytest.raises(ValueError):
        formulas.max_gamma(5, 0, 11)
    with pytest.raises(ValueError):
        formulas.max_gamma(5, 0, -1)
    with pytest.raises(ValueError):
        formulas.max_edges(5, -1, 2)


@pytest.mark.parametrize("n", range(8, 21))
def test_gamma2_regimes_partition(n):
    """Every k=2 edge count lands in exactly one regime, seamlessly."""
    small_top = 2 * (n - 6) + 10
    assert formulas.a_bracket(n, n - 4) == small_top
    assert formulas.a_bracket(n, 2) + 1 == formulas.universal_max_edges(n, 2)
    for m in range(4, comb(n, 2) + 1):
        v = formulas.max_gamma(n, 2, m)
        if m <= small_top:
            assert v.status is Status.VALUE
        elif m <= formulas.universal_max_edges(n, 2):
            r = formulas.gamma2_large_bracket(n, m)  # raises on overlap
            assert r is not None and v.value == r
        else:
            assert v.status is Status.ZERO_BY_NONEXISTENCE


@pytest.mark.parametrize("n", range(5, 16))
def test_gamma1_bracket_partition(n):
    for m in range(n + 2, comb(n - 1, 2) + 1):
        v = formulas.max_gamma(n, 1, m)
        assert v.status is Status.VALUE and 2 <= v.value <= n - 4


@pytest.mark.parametrize("n", range(8, 16))
def test_max_gamma_monotone_in_m(n):
    """D(n,k,m) never increases as edges are added, within covered ranges."""
    for k in (0, 1, 2):
        prev = None
        for m in range(0 if k == 0 else 4, comb(n, 2) + 1):
            v = formulas.max_gamma(n, k, m)
            if v.status is not Status.VALUE:
                prev = None
                continue
            if prev is not None:
                assert v.value <= prev
            prev = v.value


@pytest.mark.parametrize("n", range(5, 13))
def test_dominance_of_r2(n):
    """M(n,k,r) <= M(n,k,2) on every covered cell."""
    for k in (0, 1, 2):
        if k > (n - 2 if n % 2 == 0 else n - 3):
            continue
        cap = formulas.universal_max_edges(n, k)
        for r in range(2, n):
            v = formulas.max_edges(n, k, r)
            if v.status is Status.VALUE:
                assert v.value <= cap
