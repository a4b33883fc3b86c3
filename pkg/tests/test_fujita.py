from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from termsing.fujita import FujitaInput, fujita_check, fujita_minimums, parse_rational


def test_minimums_r2_r3():
    t = fujita_minimums(2)
    assert [x.power_minimum for x in t] == [Fr(3, 2), Fr(45, 4), Fr(27, 2)]
    assert [x.strict for x in t] == [False, False, True]
    assert [x.power_minimum for x in fujita_minimums(3)] == [Fr(4, 3), Fr(32, 3), Fr(320, 27)]


def test_minimums_independent_arithmetic():
    for r in range(2, 30):
        b = Fr(r + 1, r)
        t = fujita_minimums(r)
        assert t[1].power_minimum == Fr((r + 1) ** 2 * (r + 3), r * r)
        assert t[2].power_minimum == Fr((r + 1) ** 3 * (r + 2), r ** 3)
        assert t[0].power_minimum == b
        # base decreasing in r
        assert fujita_minimums(r + 1)[0].power_minimum < b


def test_examples():
    assert fujita_check(FujitaInput(2, (Fr(3, 2), Fr(7, 2), Fr(5, 2)))).passes
    v = fujita_check(FujitaInput(2, (Fr(3, 2), Fr(3), Fr(5, 2))))
    assert not v.passes and v.failed == [2]


def test_strict_boundary():
    # 27/2 (the r=2 bound) is not a rational cube; at r=6 the bound is (7/3)^3
    t = fujita_minimums(6)
    assert t[2].power_minimum == Fr(7, 3) ** 3
    v = fujita_check(FujitaInput(6, (Fr(7, 6), Fr(10), Fr(7, 3))))
    assert v.failed == [3]


def test_nonpositive_and_bad_r():
    with pytest.raises(ValueError):
        FujitaInput(2, (Fr(0), Fr(1), Fr(1)))
    with pytest.raises(ValueError):
        FujitaInput(1, (Fr(2), Fr(2), Fr(2)))
    with pytest.raises(ValueError):
        fujita_minimums(1)


@pytest.mark.parametrize("text,val", [("3/2", Fr(3, 2)), ("6/4", Fr(3, 2)), ("5", Fr(5)), (" -1/3", Fr(-1, 3))])
def test_parse(text, val):
    assert parse_rational(text) == val


@pytest.mark.parametrize("text", ["1.5", "1/0", "a/b", "1/2/3", ""])
def test_parse_bad(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.integers(2, 50), st.integers(1, 10**6), st.integers(1, 50))
def test_scaling_representation_invariant(r, num, den):
    s = Fr(num, den)
    v1 = fujita_check(FujitaInput(r, (s, s, s)))
    v2 = fujita_check(FujitaInput(r, (f"{num * 7}/{den * 7}",) * 3))
    assert [c.holds for c in v1.conditions] == [c.holds for c in v2.conditions]
