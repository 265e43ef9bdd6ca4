from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mbnb.oracle import definitional_matching
from mbnb.tuples import (AntichainPair, Balance, BinaryTuple, extremal_pair_Apt, extremal_pair_As,
                         format_antichain_pair, gamma, is_antichain, leq, match_components,
                         pair_in_Apt, pair_in_As, parse_antichain_pair, project_D,
                         segment_balance)
from mbnb.bounds import binomial

T = BinaryTuple.from_str


def tuples_st(min_n=1, max_n=16):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.builds(BinaryTuple, st.just(n), st.integers(0, 2**n - 1)))


def test_representation():
    a = T("011")
    assert a.bits == 3 and a.n == 3
    assert list(a) == [0, 1, 1]
    assert a.component(1) == 0 and a.component(3) == 1
    assert str(a) == "011"
    assert a.weight() == 2
    assert BinaryTuple.from_seq([0, 1, 1]) == a
    with pytest.raises(IndexError):
        a.component(4)
    with pytest.raises(ValueError):
        BinaryTuple(2, 4)


def test_leq_examples():
    assert leq(T("010"), T("011"))
    assert not leq(T("100"), T("011"))
    assert leq(T("101"), T("101"))
    with pytest.raises(ValueError):
        leq(T("01"), T("011"))


@given(tuples_st(max_n=10), st.data())
def test_leq_matches_componentwise(a, data):
    b = BinaryTuple(a.n, data.draw(st.integers(0, 2**a.n - 1)))
    assert leq(a, b) == all(x <= y for x, y in zip(a, b))


def test_segment_balance_examples():
    assert segment_balance(T("0110"), 1, 2) is Balance.BALANCED
    assert segment_balance(T("0011"), 1, 3) is Balance.ZERO_DOMINATED
    # wraps: components 3, 4, 1 of (1,0,1,1) are all ones
    assert segment_balance(T("1011"), 3, 1) is Balance.ONE_DOMINATED
    with pytest.raises(IndexError):
        segment_balance(T("1011"), 0, 2)


def test_match_components_examples():
    m = match_components(T("1101"))
    assert m.pairs == {(3, 4)}
    assert m.unbound_ones == {1, 2}
    assert m.unbound_zeros == frozenset()
    m = match_components(T("11111"))
    assert not m.pairs and m.unbound_ones == {1, 2, 3, 4, 5}


def test_match_wraps_around():
    # the 0 at position 2 closes on the 1 at position 1 across the end
    m = match_components(T("10"))
    assert m.pairs == {(2, 1)}
    m = match_components(T("1000"))
    assert m.pairs == {(4, 1)} and m.unbound_zeros == {2, 3}


@given(tuples_st(max_n=12))
def test_match_agrees_with_definition(a):
    assert match_components(a) == definitional_matching(a)


@given(tuples_st())
def test_b_plus_has_no_unbound_zeros(a):
    if 2 * a.weight() > a.n:
        assert not match_components(a).unbound_zeros


def test_project_D_examples():
    assert project_D(T("111")) == T("110")
    assert project_D(T("011")) == T("010")
    assert project_D(T("1101")) == T("1001")


def test_project_D_requires_b_plus():
    with pytest.raises(ValueError):
        project_D(T("0011"))
    with pytest.raises(ValueError):
        project_D(T("100"))


@given(tuples_st(max_n=14))
def test_project_D_drops_one_bit(a):
    if 2 * a.weight() > a.n:
        d = project_D(a)
        assert leq(d, a) and d.weight() == a.weight() - 1


def test_gamma():
    assert gamma(4, 3) == T("0111")
    assert gamma(3, 2) == T("011")
    assert gamma(5, 0) == T("00000")
    with pytest.raises(ValueError):
        gamma(3, 4)


def test_is_antichain():
    assert is_antichain([T("10"), T("01")])
    assert not is_antichain([T("10"), T("11")])
    assert is_antichain([])


def test_pair_in_As_examples():
    good = AntichainPair([T("011"), T("100")], [T("110"), T("101")])
    assert pair_in_As(good, 2)
    assert not pair_in_As(AntichainPair([T("100")], [T("110"), T("101")]), 2)
    assert not pair_in_As(AntichainPair([T("110")], [T("100")]), 2)
    with pytest.raises(ValueError):
        pair_in_As(good, 1)


def test_pair_in_Apt():
    p = AntichainPair([T("100"), T("010"), T("001")], [T("110"), T("101"), T("011")])
    assert pair_in_Apt(p, 2)
    assert not pair_in_Apt(p, 1)
    # first antichain sits above a member of the second
    assert not pair_in_Apt(AntichainPair([T("110")], [T("100")]), 2)


def test_extremal_pair_As_examples():
    p = extremal_pair_As(3, 2)
    assert p.first == {T("011"), T("100")}
    assert p.second == {T("110"), T("101")}
    assert p.cardinality == 4 == 1 + binomial(4, 2) - binomial(3, 2)
    p = extremal_pair_As(2, 2)
    assert p.first == {T("11")} and p.second == frozenset()
    assert p.cardinality == 1
    with pytest.raises(ValueError):
        extremal_pair_As(4, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_extremal_pair_As_formula(n):
    for s in range(n // 2 + 1, n + 1):
        p = extremal_pair_As(n, s)
        h = n // 2 + 1
        assert p.cardinality == 1 + binomial(n + 1, h) - binomial(s + 1, h)
        if n <= 7:
            assert pair_in_As(p, s)


def test_extremal_pair_Apt_examples():
    p = extremal_pair_Apt(3, 2)
    assert len(p.first) == 3 and len(p.second) == 3 and p.cardinality == binomial(4, 2)
    p = extremal_pair_Apt(4, 1)
    assert p.first == {T("0000")} and len(p.second) == 4 and p.cardinality == 5
    with pytest.raises(ValueError):
        extremal_pair_Apt(4, 4)


@pytest.mark.parametrize("n", range(1, 9))
def test_extremal_pair_Apt_formula(n):
    for t in range(1, n // 2 + 2):
        p = extremal_pair_Apt(n, t)
        assert p.cardinality == binomial(n + 1, t)
        assert pair_in_Apt(p, t)


def test_antichain_dump_round_trip():
    p = extremal_pair_As(4, 3)
    text = format_antichain_pair(p)
    assert "--" in text.splitlines()
    assert parse_antichain_pair(text) == p


def test_brute_force_segment_enumeration_small():
    # every (i, j) segment of every 4-tuple classifies by its counts
    for bits in product((0, 1), repeat=4):
        a = BinaryTuple.from_seq(bits)
        for i, j in product(range(1, 5), repeat=2):
            idx = list(range(i, j + 1)) if i <= j else list(range(i, 5)) + list(range(1, j + 1))
            ones = sum(bits[k - 1] for k in idx)
            zeros = len(idx) - ones
            want = (Balance.BALANCED if ones == zeros else
                    Balance.ZERO_DOMINATED if zeros > ones else Balance.ONE_DOMINATED)
            assert segment_balance(a, i, j) is want
