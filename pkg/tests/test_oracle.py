import random
from math import comb, gcd

import pytest

from termsing import _kernels, _pykernels
from termsing.descent import quotient_multiplicity
from termsing.oracle import (
    OracleGuardError,
    WeightedQuotientMonoid,
    hilbert_basis,
    hypersurface_graded_dim,
    oracle_multiplicity,
    order_filtration,
)

try:
    from termsing import _ckernels
except ImportError:
    _ckernels = None

KERNELS = [pytest.param(_pykernels, id="python")]
KERNELS.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)


@pytest.fixture(params=KERNELS)
def kernel(request, monkeypatch):
    mod = request.param
    monkeypatch.setattr(_kernels, "hilbert_basis", mod.hilbert_basis)
    monkeypatch.setattr(_kernels, "order_counts", mod.order_counts)
    return mod


def brute_basis(r, weights):
    """Definition straight from the box: nonzero members not a sum of two nonzero members."""
    from itertools import product

    d = len(weights)
    mem = [e for e in product(range(r + 1), repeat=d)
           if any(e) and sum(w * x for w, x in zip(weights, e)) % r == 0]
    mset = set(mem)
    out = set()
    for e in mem:
        split = any(
            f != e and tuple(x - y for x, y in zip(e, f)) in mset
            for f in mem if all(y <= x for x, y in zip(e, f))
        )
        if not split:
            out.add(e)
    return out


def test_basis_z2_111(kernel):
    got = hilbert_basis(WeightedQuotientMonoid(2, (1, 1, 1)))
    assert got == {(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)}


def test_basis_z3_111(kernel):
    got = hilbert_basis(WeightedQuotientMonoid(3, (1, 1, 1)))
    assert len(got) == 10 and all(sum(e) == 3 for e in got)


def test_basis_z13_581(kernel):
    assert len(hilbert_basis(WeightedQuotientMonoid(13, (5, 8, 1)))) == 10


@pytest.mark.parametrize("r,w", [(5, (2, 3, 1)), (6, (1, 5, 1)), (4, (1, 1, 2)), (7, (3, 1)), (6, (2, 3, 5))])
def test_basis_matches_definition(kernel, r, w):
    assert hilbert_basis(WeightedQuotientMonoid(r, w)) == brute_basis(r, w)


@pytest.mark.parametrize(
    "r,w,K,counts",
    [
        (2, (1, 1, 1), 2, (1, 6, 15)),
        (3, (1, 1, 1), 2, (1, 10, 28)),
        (3, (1, 1), 3, (1, 4, 7, 10)),
    ],
)
def test_order_filtration_examples(kernel, r, w, K, counts):
    t = order_filtration(WeightedQuotientMonoid(r, w), K)
    assert t.counts == counts
    assert t.counts[0] == 1 and t.counts[1] == len(t.hilbert_basis)


def test_z2_counts_are_even_degree_monomials(kernel):
    t = order_filtration(WeightedQuotientMonoid(2, (1, 1, 1)), 5)
    assert list(t.counts) == [comb(2 * k + 2, 2) for k in range(6)]


@pytest.mark.parametrize(
    "r,w,expected",
    [(13, (5, 8, 1), (8, True)), (3, (1, 1, 1), (9, True)), (5, (2, 1), (3, True))],
)
def test_oracle_multiplicity(kernel, r, w, expected):
    assert oracle_multiplicity(WeightedQuotientMonoid(r, w), 4) == expected


def test_formula_oracle_agreement(kernel):
    for r in range(2, 13):
        for a in range(1, r):
            if gcd(r, a) != 1:
                continue
            m = quotient_multiplicity(r, a)
            t = order_filtration(WeightedQuotientMonoid(r, (a, r - a, 1)), 4)
            assert t.embdim == m + 2
            assert list(t.counts) == [m * k * (k + 1) // 2 + k + 1 for k in range(5)]


def test_basis_order_does_not_matter(kernel):
    Q = WeightedQuotientMonoid(11, (4, 7, 1))
    ref = order_filtration(Q, 4)
    basis = list(ref.hilbert_basis)
    rng = random.Random(7)
    for _ in range(5):
        rng.shuffle(basis)
        assert order_filtration(Q, 4, basis=basis).counts == ref.counts


def test_counts_positive(kernel):
    t = order_filtration(WeightedQuotientMonoid(9, (2, 7, 1)), 5)
    assert all(c > 0 for c in t.counts)


def test_kernels_agree():
    if _ckernels is None:
        pytest.skip("extension not built")
    for r, w in [(17, (5, 12, 1)), (12, (5, 7, 1)), (9, (2, 1)), (8, (3, 2, 1))]:
        b = _pykernels.hilbert_basis(r, w)
        assert b == _ckernels.hilbert_basis(r, w)
        D = 4 * max(map(sum, b))
        assert _pykernels.order_counts(r, w, b, D, 4) == _ckernels.order_counts(r, w, b, D, 4)


def test_guard():
    with pytest.raises(OracleGuardError, match="estimated lattice size"):
        order_filtration(WeightedQuotientMonoid(31, (1, 30, 1)), 4)
    with pytest.raises(OracleGuardError):
        order_filtration(WeightedQuotientMonoid(5, (1, 4, 1)), 7)
    t = order_filtration(WeightedQuotientMonoid(31, (1, 30, 1)), 3, max_r=40)
    assert t.embdim == 35 and t.counts[2] - 2 * t.counts[1] + t.counts[0] == 33


def test_monoid_membership_and_domain():
    Q = WeightedQuotientMonoid(5, (7, -2, 1))
    assert Q.weights == (2, 3, 1)
    assert (0, 0, 0) in Q and (1, 1, 0) in Q and (1, 0, 0) not in Q
    with pytest.raises(ValueError):
        WeightedQuotientMonoid(5, (1, 2, 3, 4))
    with pytest.raises(ValueError):
        oracle_multiplicity(Q, 2)


@pytest.mark.parametrize("k,v", [(0, 1), (1, 4), (3, 16)])
def test_hypersurface_graded_dim(k, v):
    assert hypersurface_graded_dim(4, 2, k) == v == (k + 1) ** 2


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    monkeypatch.setitem(sys.modules, "termsing._ckernels", None)
    try:
        mod = importlib.reload(_kernels)
        assert mod.IMPL == "python"
        assert mod.order_counts is _pykernels.order_counts
    finally:
        monkeypatch.undo()
        importlib.reload(_kernels)
