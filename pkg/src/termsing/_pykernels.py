"""Pure-Python lattice kernels; reference fallback for the compiled core."""
from itertools import product

IMPL = "python"


def _box_points(d, bound, max_degree):
    for e in product(range(bound + 1), repeat=d):
        if sum(e) <= max_degree:
            yield e


def hilbert_basis(r, weights):
    d = len(weights)
    w = [x % r for x in weights]
    members = [
        e for e in _box_points(d, r, d * r)
        if any(e) and sum(wi * ei for wi, ei in zip(w, e)) % r == 0
    ]
    members.sort(key=lambda e: (sum(e), e))
    basis = []
    for e in members:
        if not any(all(hi <= ei for hi, ei in zip(h, e)) for h in basis):
            basis.append(e)
    return basis


def order_counts(r, weights, basis, max_degree, K):
    d = len(weights)
    w = [x % r for x in weights]
    ord_ = {}
    counts = [0] * (K + 1)
    for e in _box_points(d, max_degree, max_degree):
        if sum(wi * ei for wi, ei in zip(w, e)) % r:
            continue
        if not any(e):
            best = 0
        else:
            best = -1
            for h in basis:
                if all(hi <= ei for hi, ei in zip(h, e)):
                    v = ord_[tuple(ei - hi for ei, hi in zip(e, h))]
                    if v >= best:
                        best = v + 1
        ord_[e] = best
        if best <= K:
            counts[best] += 1
    return counts
