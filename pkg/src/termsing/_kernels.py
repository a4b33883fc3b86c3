"""Select the compiled lattice kernels when built, else the Python fallback."""
try:
    import termsing._ckernels as impl
except ImportError:  # extension not built
    import termsing._pykernels as impl

hilbert_basis = impl.hilbert_basis
order_counts = impl.order_counts
IMPL = impl.IMPL
