"""Invariants of 3-fold terminal singularities, with a brute-force lattice oracle."""
from termsing.catalog import (
    CAr,
    CAx2,
    CAx4,
    CD2,
    CD3,
    CE2,
    CyclicQuotient,
    GorensteinCDV,
    HilbertQuadratic,
    InvariantReport,
    Smooth,
    case_basis_count,
    graded_dim,
    invariants,
    is_terminal_quotient,
)
from termsing.descent import DescentSequence, descend, quotient_multiplicity
from termsing.fano import fano_volume_bound, index_divides_24fact, lemma32_bound
from termsing.fujita import FujitaInput, fujita_check, fujita_minimums
from termsing.oracle import (
    WeightedQuotientMonoid,
    hilbert_basis,
    hypersurface_graded_dim,
    oracle_multiplicity,
    order_filtration,
)
from termsing.surface import HJChain, hj_expand, surface_graded_dim, surface_multiplicity

__version__ = "0.1.0"
