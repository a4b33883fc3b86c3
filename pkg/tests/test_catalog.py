from math import gcd

import pytest
from hypothesis import given, strategies as st

from termsing.catalog import (
    CAr,
    CAx2,
    CAx4,
    CD2,
    CD3,
    CE2,
    CLASS_NAMES,
    CyclicQuotient,
    GorensteinCDV,
    HilbertQuadratic,
    Smooth,
    all_fixed_classes,
    case_basis_count,
    class_name,
    graded_dim,
    invariants,
    is_terminal_quotient,
    make_class,
)
from termsing.oracle import hypersurface_graded_dim

TABLE = [
    (Smooth(), (1, 1, 3)),
    (GorensteinCDV(), (1, 2, 4)),
    (CAx4(), (4, 6, 8)),
    (CAx2(), (2, 4, 6)),
    (CD2(), (2, 4, 6)),
    (CD3(), (3, 5, 7)),
    (CE2(), (2, 4, 6)),
    (CyclicQuotient(13, 5), (13, 8, 10)),
    (CAr(13, 5), (13, 8, 10)),
    (CAr(4, 1), (4, 6, 8)),
]


@pytest.mark.parametrize("c,triple", TABLE)
def test_invariant_table(c, triple):
    inv = invariants(c)
    assert (inv.index, inv.mult, inv.embdim) == triple
    assert inv.theorem_applicable


def test_hilbert_quadratic():
    h = HilbertQuadratic(6)
    assert h(0) == 1 and h(1) == 8 and h.eval(2) == 21


def test_graded_dim_examples():
    assert graded_dim(GorensteinCDV(), 3) == 16
    assert graded_dim(CAx4(), 1) == 8
    for c in all_fixed_classes()[1:]:
        assert graded_dim(c, 0) == 1
    assert [graded_dim(Smooth(), k) for k in range(4)] == [1, 3, 6, 10]


@pytest.mark.parametrize("c,k,n", [(CAx4(), 1, 8), (CD3(), 1, 7), (CAx2(), 1, 6), (GorensteinCDV(), 1, 4)])
def test_case_basis_examples(c, k, n):
    assert case_basis_count(c, k) == n


@pytest.mark.parametrize("c", [GorensteinCDV(), CAx4(), CAx2(), CD3()])
def test_case_sum_equals_closed_form(c):
    for k in range(101):
        assert case_basis_count(c, k) == graded_dim(c, k)


@pytest.mark.parametrize("c", [CD2(), CE2(), Smooth(), CyclicQuotient(5, 2)])
def test_case_basis_unsupported(c):
    with pytest.raises(ValueError, match="no explicit basis"):
        case_basis_count(c, 1)


def test_cdv_matches_quadric_cone():
    for k in range(51):
        assert hypersurface_graded_dim(4, 2, k) == graded_dim(GorensteinCDV(), k)


@pytest.mark.parametrize("c", all_fixed_classes() + [CyclicQuotient(7, 3), CAr(9, 2)])
def test_mult_index_bound(c):
    inv = invariants(c)
    assert inv.mult <= inv.index + 2
    if inv.index == 1:
        assert inv.mult <= 2
    if isinstance(c, (CAx4, CAx2, CD2, CD3, CE2)):
        assert inv.mult == inv.index + 2


@pytest.mark.parametrize("c", all_fixed_classes()[1:] + [CyclicQuotient(11, 4)])
def test_cumulative_is_cubic(c):
    # third differences of the partial sums are constant = mult
    partial, s = [], 0
    for k in range(12):
        s += graded_dim(c, k)
        partial.append(s)
    d = partial
    for _ in range(3):
        d = [b - a for a, b in zip(d, d[1:])]
    assert set(d) == {invariants(c).mult}


def test_is_terminal_quotient_examples():
    assert is_terminal_quotient(13, (5, 8, 1)) == 5
    assert is_terminal_quotient(3, (1, 1, 1)) is None
    assert is_terminal_quotient(2, (1, 1, 1)) == 1


@given(st.integers(2, 60), st.data())
def test_is_terminal_quotient_recognizes_orbits(r, data):
    units = [u for u in range(1, r) if gcd(u, r) == 1]
    a = data.draw(st.sampled_from(units))
    c = data.draw(st.sampled_from(units))
    perm = data.draw(st.permutations([a, r - a, 1]))
    got = is_terminal_quotient(r, [c * x % r for x in perm])
    assert got is not None
    # same unordered orbit: the recovered a is a or r - a
    assert got in (a, r - a)


def test_is_terminal_quotient_rejects_noncoprime_pair():
    assert is_terminal_quotient(6, (2, 4, 1)) is None
    assert is_terminal_quotient(5, (1, 2, 3)) == 2
    assert is_terminal_quotient(7, (1, 2, 3)) is None


def test_class_names_and_factory():
    assert sorted(CLASS_NAMES.values()) == sorted(
        ["smooth", "cDV", "quotient", "cA/r", "cAx/4", "cAx/2", "cD/2", "cD/3", "cE/2"]
    )
    assert make_class("quotient", 13, 5) == CyclicQuotient(13, 5)
    assert class_name(make_class("cD/3")) == "cD/3"
    assert CD2(note="u^2 + xyz + z^n") == CD2()
    with pytest.raises(ValueError, match="gcd"):
        make_class("quotient", 4, 2)
    with pytest.raises(ValueError, match="unknown class"):
        make_class("cZ/9")
    with pytest.raises(ValueError, match="needs both"):
        make_class("cA/r", 5)
